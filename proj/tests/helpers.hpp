#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ope/constellation.hpp"
#include "ope/poset.hpp"

namespace test_helpers {

/// Warshall closure, independent of the DFS closure inside Poset.
inline std::vector<std::vector<bool>> closure_oracle(
    int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (auto [a, b] : edges) m[a][b] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (m[i][k] && m[k][j]) m[i][j] = true;
    return m;
}

/// Deterministic xorshift generator for hand-rolled property tests.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed ? seed : 1) {}
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

/// Random forest-of-trees poset on n nodes (always a thicket).
inline ope::Poset random_tree(Rng& rng, int n) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
    for (int i = 1; i < n; ++i) covers.emplace_back(names[i], names[rng.below(i)]);
    return ope::Poset::from_covers(names, covers);
}

/// Random poset on n nodes via a random DAG on index order, Hasse-reduced.
inline ope::Poset random_poset(Rng& rng, int n) {
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.below(3) == 0) edges.emplace_back(i, j);
    auto closed = closure_oracle(n, edges);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
    return ope::Poset::from_relation(names, closed);
}

/// The constellation order of T3's level-1/2 constellation, built from frozen
/// covers (independent of constellation_order()).
inline ope::Poset ct_t3_sigma1() {
    return ope::Poset::from_covers(
        {"y1~v", "y4~v", "y5~v", "y6~v", "b1~c", "b2~c", "b3~c"},
        {{"y4~v", "b3~c"},
         {"y5~v", "b3~c"},
         {"y6~v", "b2~c"},
         {"b3~c", "b2~c"},
         {"y1~v", "b1~c"},
         {"b2~c", "b1~c"}});
}

inline std::vector<std::string> names_of(const ope::Poset& p, const std::vector<int>& xs) {
    std::vector<std::string> out;
    for (int x : xs) out.push_back(p.name(x));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace test_helpers
