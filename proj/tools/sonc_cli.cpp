// Command-line front end: every subcommand maps to one library operation.
// Exit codes: 0 success, 1 domain error, 2 parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sonc/faces.hpp"
#include "sonc/json_writer.hpp"
#include "sonc/newton.hpp"
#include "sonc/poly_io.hpp"
#include "sonc/projective.hpp"
#include "sonc/real_zeros.hpp"

namespace {

using namespace sonc;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Options {
    std::string format = "json";
    bool text() const { return format == "text"; }
};

void emit(const Options& opt, const std::string& json, const std::string& text) {
    std::cout << (opt.text() ? text : json) << "\n";
}

std::string describe_circuit(const Circuit& c, const std::string& verdict) {
    std::ostringstream out;
    out << (c.proper ? "proper circuit" : "improper circuit (monomial squares)");
    if (c.degenerate) out << ", degenerate";
    out << ", " << (verdict == "outside" ? "not nonnegative" : "nonnegative");
    if (c.proper) {
        out << "\nlambda =";
        for (const auto& l : c.lambda) out << " " << to_string(l);
    }
    out << "\nverdict: " << verdict;
    return out.str();
}

std::vector<Circuit> load_parts(const std::string& poly_arg, const std::string& decomposition) {
    if (!decomposition.empty()) {
        std::vector<Circuit> parts;
        for (auto& [mu, c] : parse_decomposition_json(slurp(decomposition))) {
            if (mu != 1) c = scale_circuit(c, mu);
            parts.push_back(std::move(c));
        }
        return parts;
    }
    return {detect_circuit(parse_poly_auto(poly_arg))};
}

int run(int argc, char** argv) {
    CLI::App app{"exact analysis of sums of nonnegative circuit polynomials"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    std::string poly_arg, decomposition, points_file;
    int arg_m = 0, arg_2d = 0, arg_n = 0, arg_deg = 0;
    std::string gamma = "full";
    bool emit_basis = false, override_budget = false;
    int homog_degree = -1;

    auto* cmd_check = app.add_subcommand("check", "validate a circuit and decide nonnegativity");
    cmd_check->add_option("poly", poly_arg)->required();

    auto* cmd_theta = app.add_subcommand("theta", "circuit-number comparison");
    cmd_theta->add_option("poly", poly_arg)->required();

    auto* cmd_zeros = app.add_subcommand("zeros", "affine real zero set");
    cmd_zeros->add_option("poly", poly_arg);
    cmd_zeros->add_option("--decomposition", decomposition, "circuit list JSON file");

    auto* cmd_homog = app.add_subcommand("homogenize", "homogenize a polynomial");
    cmd_homog->add_option("poly", poly_arg)->required();
    cmd_homog->add_option("--degree", homog_degree, "target even degree");

    auto* cmd_inf = app.add_subcommand("infinity", "zeros at infinity of a form (x0..xn)");
    cmd_inf->add_option("form", poly_arg)->required();

    auto* cmd_count = app.add_subcommand("count", "projective zero count");
    cmd_count->add_option("poly", poly_arg);
    cmd_count->add_option("--decomposition", decomposition, "circuit list JSON file");
    cmd_count->add_option("--degree", homog_degree, "homogenization degree");

    auto* cmd_bnum = app.add_subcommand("bnumber", "maximal projective zero count B''");
    cmd_bnum->add_option("n_plus_1", arg_m)->required();
    cmd_bnum->add_option("two_d", arg_2d)->required();

    auto* cmd_wit = app.add_subcommand("witness", "witness form achieving B''");
    cmd_wit->add_option("n_plus_1", arg_m)->required();
    cmd_wit->add_option("two_d", arg_2d)->required();

    auto* cmd_face = app.add_subcommand("facedim", "exposed-face dimension");
    cmd_face->add_option("--n", arg_n)->required();
    cmd_face->add_option("--deg", arg_deg)->required();
    cmd_face->add_option("--gamma", gamma)->check(CLI::IsMember({"full", "half", "explicit"}));
    cmd_face->add_option("--points", points_file, "explicit Gamma, one polynomial-grammar "
                                                  "point per line: comma-separated rationals");
    cmd_face->add_flag("--emit-basis", emit_basis);
    cmd_face->add_flag("--override-budget", override_budget);

    auto* cmd_bounds = app.add_subcommand("bounds", "dimension bounds for an exposed face");
    cmd_bounds->add_option("--n", arg_n)->required();
    cmd_bounds->add_option("--deg", arg_deg)->required();
    cmd_bounds->add_option("--gamma", gamma)->check(CLI::IsMember({"full", "half", "explicit"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    auto face_query = [&]() {
        FaceQuery q;
        q.n = arg_n;
        q.two_d = arg_deg;
        q.override_budget = override_budget;
        if (gamma == "full") q.kind = FaceQuery::Gamma::FullOrbit;
        if (gamma == "half") q.kind = FaceQuery::Gamma::HalfOrbit;
        if (gamma == "explicit") {
            q.kind = FaceQuery::Gamma::Explicit;
            std::istringstream in(slurp(points_file));
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                std::vector<Rational> pt;
                std::istringstream ls(line);
                std::string tok;
                while (std::getline(ls, tok, ',')) pt.push_back(rational_from_string(tok));
                if (static_cast<int>(pt.size()) != q.n)
                    throw DomainError("point dimension mismatch in " + points_file);
                q.points.push_back(std::move(pt));
            }
        }
        return q;
    };

    if (*cmd_check) {
        Circuit c = detect_circuit(parse_poly_auto(poly_arg));
        std::string verdict =
            c.proper ? verdict_name(theta_compare(c).verdict) : "sum-of-monomial-squares";
        JsonWriter w;
        w.begin_object();
        w.key("circuit").value_raw(c.to_json());
        w.key("verdict").value(verdict);
        w.key("nonnegative").value(!c.proper || verdict != "outside");
        w.end_object();
        emit(opt, w.str(), describe_circuit(c, verdict));
    } else if (*cmd_theta) {
        ThetaComparison cmp = theta_compare(detect_circuit(parse_poly_auto(poly_arg)));
        emit(opt, cmp.to_json(),
             "q = " + cmp.q.get_str() + "\ntheta^q = " + to_string(cmp.theta_q) +
                 "\ntheta ~ " + format_double(cmp.theta_float) +
                 "\nverdict: " + verdict_name(cmp.verdict));
    } else if (*cmd_zeros) {
        if (poly_arg.empty() && decomposition.empty())
            throw DomainError("zeros: give a polynomial or --decomposition");
        std::vector<Circuit> parts;
        try {
            parts = load_parts(poly_arg, decomposition);
        } catch (const NotACircuit& e) {
            throw DomainError(std::string(e.what()) +
                              "; pass --decomposition with an explicit circuit list");
        }
        ZeroSet z = parts.size() == 1 ? circuit_zeros(parts[0]) : sonc_common_zeros(parts);
        std::ostringstream text;
        if (z.kind == ZeroSet::Kind::Finite) {
            text << "finite zero set, |V(f)| = " << z.count().get_str();
        } else {
            text << "infinite zero set";
        }
        emit(opt, z.to_json(), text.str());
    } else if (*cmd_homog) {
        SparsePoly form = parse_poly_auto(poly_arg).homogenize(homog_degree);
        emit(opt, form.to_json(), form.to_text(0));
    } else if (*cmd_inf) {
        InfinityReport rep = zeros_at_infinity(parse_poly_auto(poly_arg, 0));
        std::ostringstream text;
        if (rep.kind == InfinityReport::Kind::Infinite)
            text << "infinitely many zeros at infinity";
        else
            text << "additional zeros at infinity: " << rep.additional_count.get_str();
        emit(opt, rep.to_json(), text.str());
    } else if (*cmd_count) {
        if (poly_arg.empty() && decomposition.empty())
            throw DomainError("count: give a polynomial or --decomposition");
        ProjectiveCount pc = projective_zero_count(load_parts(poly_arg, decomposition),
                                                   homog_degree);
        std::ostringstream text;
        if (pc.finite)
            text << pc.affine.get_str() << " affine + " << pc.at_infinity.get_str()
                 << " at infinity = " << pc.total.get_str();
        else
            text << "infinitely many projective zeros";
        emit(opt, pc.to_json(), text.str());
    } else if (*cmd_bnum) {
        BNumberReport rep = b_double_prime(arg_m, arg_2d);
        emit(opt, rep.to_json(),
             "B''_{" + std::to_string(arg_m) + "," + std::to_string(arg_2d) +
                 "} = " + rep.value.get_str() + "  (" + rep.regime + ")\nwitness: " +
                 rep.witness.to_text(0));
    } else if (*cmd_wit) {
        SparsePoly w = witness_form(arg_m, arg_2d);
        JsonWriter jw;
        jw.begin_object();
        jw.key("n_plus_1").value(static_cast<long>(arg_m));
        jw.key("two_d").value(static_cast<long>(arg_2d));
        jw.key("witness").value(w.to_text(0));
        jw.end_object();
        emit(opt, jw.str(), w.to_text(0));
    } else if (*cmd_face) {
        FaceQuery q = face_query();
        FaceReport rep = face_dimension(q);
        std::string json = rep.to_json();
        std::ostringstream text;
        text << "dim_C = " << rep.dim_c;
        if (rep.dim_p_generic_value)
            text << ", dim_P_generic = " << rep.dim_p_generic_value->get_str()
                 << (rep.dim_p_valid ? "" : " (formula not valid here)");
        text << ", agiforms = " << rep.agiform_count;
        if (emit_basis) {
            JsonWriter w;
            w.begin_object();
            w.key("report").value_raw(json);
            w.key("basis").begin_array();
            for (const auto& c : face_basis(q)) {
                w.value(c.to_poly().to_text(1));
                text << "\n" << c.to_poly().to_text(1);
            }
            w.end_array();
            w.end_object();
            json = w.str();
        }
        emit(opt, json, text.str());
    } else if (*cmd_bounds) {
        BoundReport rep = dimension_bounds(face_query());
        std::ostringstream text;
        text << "naive bound = " << rep.naive.get_str();
        if (rep.bivariate) text << ", bivariate refined = " << rep.bivariate->get_str();
        if (rep.even_n) text << ", even-n refined = " << rep.even_n->get_str();
        emit(opt, rep.to_json(), text.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const sonc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const sonc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
