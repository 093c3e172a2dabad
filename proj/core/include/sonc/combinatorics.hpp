#pragma once

#include <algorithm>
#include <vector>

namespace sonc {

// All minimal hitting sets (transversals) of a family of index sets over
// {0..n-1}, sorted lexicographically. An empty family has the empty set as
// its unique minimal transversal; a family containing the empty set has
// none. Branch on the first uncovered set, then filter non-minimal
// candidates; family sizes here are desk scale.
inline std::vector<std::vector<int>> minimal_hitting_sets(
    const std::vector<std::vector<int>>& supports, int n) {
    for (const auto& s : supports)
        if (s.empty()) return {};

    std::vector<std::vector<int>> candidates;
    std::vector<int> chosen;
    std::vector<bool> in_chosen(n, false);

    auto uncovered = [&]() -> const std::vector<int>* {
        for (const auto& s : supports) {
            bool hit = false;
            for (int e : s)
                if (in_chosen[e]) {
                    hit = true;
                    break;
                }
            if (!hit) return &s;
        }
        return nullptr;
    };

    auto walk = [&](auto&& self) -> void {
        const std::vector<int>* s = uncovered();
        if (!s) {
            candidates.push_back(chosen);
            return;
        }
        for (int e : *s) {
            if (in_chosen[e]) continue;
            in_chosen[e] = true;
            chosen.push_back(e);
            self(self);
            chosen.pop_back();
            in_chosen[e] = false;
        }
    };
    walk(walk);

    for (auto& c : candidates) std::sort(c.begin(), c.end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<std::vector<int>> minimal;
    for (const auto& c : candidates) {
        bool has_proper_subset = false;
        for (const auto& d : candidates) {
            if (d.size() < c.size() &&
                std::includes(c.begin(), c.end(), d.begin(), d.end())) {
                has_proper_subset = true;
                break;
            }
        }
        if (!has_proper_subset) minimal.push_back(c);
    }
    return minimal;
}

}  // namespace sonc
