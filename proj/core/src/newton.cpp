#include "sonc/newton.hpp"

#include <algorithm>

#include "sonc/json_writer.hpp"
#include "sonc/linalg.hpp"

namespace sonc {

std::vector<Exponent> support_points(const SparsePoly& p) {
    std::vector<Exponent> pts;
    pts.reserve(p.term_count());
    for (const auto& [e, c] : p.terms()) pts.push_back(e);
    return pts;
}

SupportReport newton_support_classify(const SparsePoly& p) {
    if (p.is_zero()) throw DomainError("support of the zero polynomial");
    std::vector<Exponent> pts = support_points(p);

    SupportReport rep;
    rep.has_constant_term = p.has_constant_term();
    rep.affine_dim = affine_dimension(pts);
    rep.full_dimensional = rep.affine_dim == p.var_count();

    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<Exponent> others;
        others.reserve(pts.size() - 1);
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (others.empty() || !in_convex_hull(others, pts[i])) rep.vertices.push_back(pts[i]);
    }
    std::sort(rep.vertices.begin(), rep.vertices.end(), GradedLex{});
    return rep;
}

std::string SupportReport::to_json() const {
    JsonWriter w;
    w.begin_object();
    w.key("vertices").begin_array();
    for (const auto& v : vertices) {
        w.begin_array();
        for (int e : v) w.value(static_cast<long>(e));
        w.end_array();
    }
    w.end_array();
    w.key("affine_dim").value(static_cast<long>(affine_dim));
    w.key("has_constant_term").value(has_constant_term);
    w.key("full_dimensional").value(full_dimensional);
    w.end_object();
    return w.str();
}

}  // namespace sonc
