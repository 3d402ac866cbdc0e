#include <doctest.h>

#include "helpers.hpp"
#include "ope/enumerate.hpp"
#include "ope/poset.hpp"

using namespace ope;
using test_helpers::closure_oracle;
using test_helpers::ct_t3_sigma1;
using test_helpers::names_of;
using test_helpers::Rng;

namespace {

Poset t3_l1() {
    return Poset::from_covers({"y1", "y4", "y5", "y6"},
                              {{"y4", "y1"}, {"y5", "y4"}, {"y6", "y5"}});
}

Poset diamond() {
    return Poset::from_covers({"bot", "a", "b", "top"},
                              {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}});
}

Poset thk_l2() { return Poset::from_covers({"a0", "a1", "a2"}, {{"a2", "a1"}}); }

}  // namespace

TEST_CASE("leq follows the closure of covers") {
    Poset chain = t3_l1();
    CHECK(leq(chain, "y6", "y4"));
    CHECK(leq(chain, "y4", "y4"));
    CHECK_FALSE(leq(chain, "y4", "y6"));
    Poset ct = ct_t3_sigma1();
    CHECK_FALSE(leq(ct, "y4~v", "y6~v"));
    CHECK_FALSE(leq(ct, "y6~v", "y4~v"));
    CHECK_THROWS_AS(leq(chain, "nope", "y4"), std::out_of_range);
}

TEST_CASE("closure matches an independent Warshall oracle") {
    Rng rng(42);
    for (int round = 0; round < 40; ++round) {
        Poset p = test_helpers::random_poset(rng, 2 + rng.below(7));
        std::vector<std::pair<int, int>> edges;
        for (auto [c, par] : p.cover_pairs()) edges.emplace_back(c, par);
        auto oracle = closure_oracle(p.size(), edges);
        for (int a = 0; a < p.size(); ++a)
            for (int b = 0; b < p.size(); ++b) CHECK(p.lt(a, b) == oracle[a][b]);
    }
}

TEST_CASE("sup2 picks the least common upper bound") {
    Poset ct = ct_t3_sigma1();
    CHECK(sup2(ct, "y4~v", "y6~v") == "b2~c");
    CHECK(sup2(ct, "y4~v", "y4~v") == "y4~v");
    std::string why;
    Poset l2 = thk_l2();
    CHECK(sup2(l2, "a0", "a1", &why) == std::nullopt);
    CHECK(why.find("no-sup") != std::string::npos);
}

TEST_CASE("sup2 is total on trees and idempotent everywhere") {
    for (int n = 1; n <= 6; ++n)
        for (const Poset& t : enumerate_trees(n))
            for (int a = 0; a < t.size(); ++a) {
                CHECK(t.sup2(a, a) == a);
                for (int b = 0; b < t.size(); ++b) CHECK(t.sup2(a, b).has_value());
            }
}

TEST_CASE("leaves_over collects the minimal elements below") {
    Poset ct = ct_t3_sigma1();
    CHECK(names_of(ct, leaves_over(ct, ct.index_of("b2~c"))) ==
          std::vector<std::string>{"y4~v", "y5~v", "y6~v"});
    CHECK(names_of(ct, leaves_over(ct, ct.index_of("y1~v"))) == std::vector<std::string>{"y1~v"});
    CHECK(names_of(ct, leaves_over(ct, ct.index_of("b1~c"))) ==
          std::vector<std::string>{"y1~v", "y4~v", "y5~v", "y6~v"});
}

TEST_CASE("cover_of on elements and convex subtrees") {
    Poset ct = ct_t3_sigma1();
    CHECK(names_of(ct, cover_of(ct, std::vector<int>{ct.index_of("b3~c")})) ==
          std::vector<std::string>{"y4~v", "y5~v"});
    CHECK(names_of(ct, cover_of(ct, std::vector<int>{ct.index_of("b1~c"), ct.index_of("b2~c"),
                                                     ct.index_of("b3~c")})) ==
          std::vector<std::string>{"y1~v", "y4~v", "y5~v", "y6~v"});
    CHECK(cover_of(ct, ct.index_of("y5~v")).empty());
    // cover of a single element agrees with the singleton carrier
    CHECK(cover_of(ct, ct.index_of("b3~c")) ==
          cover_of(ct, std::vector<int>{ct.index_of("b3~c")}));
    // not convex: {b1, b3} skips b2
    CHECK_THROWS_AS(cover_of(ct, std::vector<int>{ct.index_of("b1~c"), ct.index_of("b3~c")}),
                    std::invalid_argument);
}

TEST_CASE("classification of trees, thickets and the rest") {
    PosetClass c = classify_poset(t3_l1());
    CHECK(c.kind == PosetKind::Tree);
    CHECK(t3_l1().name(*c.root) == "y1");

    CHECK(classify_poset(diamond()).kind == PosetKind::General);

    PosetClass t = classify_poset(thk_l2());
    CHECK(t.kind == PosetKind::Thicket);

    Poset empty;
    PosetClass e = classify_poset(empty);
    CHECK(e.kind == PosetKind::General);
    CHECK(e.diagnostic == "empty");

    // V-shape: one element under two incomparable tops is still a thicket
    Poset v = Poset::from_covers({"x", "a", "b"}, {{"x", "a"}, {"x", "b"}});
    CHECK(classify_poset(v).kind == PosetKind::Thicket);
}

namespace {
// Independent counter: convex subtrees of a tree rooted at v, via the
// product-over-branches recursion.
long convex_count_oracle(const Poset& t) {
    std::vector<long> g(t.size(), 0);
    std::vector<int> order(t.size());
    for (int i = 0; i < t.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return t.down_set(a).size() < t.down_set(b).size();
    });
    for (int v : order) {
        long prod = 1;
        for (int c : t.children(v)) prod *= 1 + g[c];
        g[v] = prod;
    }
    long total = 0;
    for (int v = 0; v < t.size(); ++v) total += g[v];
    return total;
}
}  // namespace

TEST_CASE("convex_subtrees enumerates exactly the valid carriers") {
    Poset one = Poset::from_covers({"x"}, {});
    CHECK(convex_subtrees(one).size() == 1);

    Poset two = Poset::from_covers({"a", "b"}, {{"a", "b"}});
    auto subs = convex_subtrees(two);
    CHECK(subs.size() == 3);

    Poset ct20 = Poset::from_covers({"t3~v", "y3~c", "y2~c"},
                                    {{"t3~v", "y3~c"}, {"y3~c", "y2~c"}});
    CHECK(static_cast<long>(convex_subtrees(ct20).size()) == convex_count_oracle(ct20));

    for (int n = 1; n <= 6; ++n)
        for (const Poset& t : enumerate_trees(n)) {
            auto got = convex_subtrees(t);
            CHECK(static_cast<long>(got.size()) == convex_count_oracle(t));
            for (const ConvexSubtree& cs : got) {
                CHECK(validate_convex_subtree(t, cs.carrier).ok());
                auto cov = cover_of(t, cs.carrier);
                for (int x : cov)
                    CHECK_FALSE(std::binary_search(cs.carrier.begin(), cs.carrier.end(), x));
            }
        }
}

TEST_CASE("leaves over the root are all the leaves") {
    for (int n = 1; n <= 6; ++n)
        for (const Poset& t : enumerate_trees(n)) {
            int root = *t.classification().root;
            CHECK(leaves_over(t, root) == leaves(t));
            for (int x = 0; x < t.size(); ++x) {
                CHECK_FALSE(leaves_over(t, x).empty());
                auto up = t.up_set(x);
                for (size_t i = 0; i < up.size(); ++i)
                    for (size_t j = i + 1; j < up.size(); ++j) CHECK(t.comparable(up[i], up[j]));
            }
        }
}

TEST_CASE("partition law: covers of a leafless convex subtree split the leaves") {
    for (int n = 1; n <= 7; ++n)
        for (const Poset& s : enumerate_trees(n)) {
            auto lvs = leaves(s);
            for (const ConvexSubtree& cs : convex_subtrees(s)) {
                bool has_leaf = false;
                for (int x : cs.carrier)
                    if (std::find(lvs.begin(), lvs.end(), x) != lvs.end()) has_leaf = true;
                if (has_leaf) continue;
                auto cover = cover_of(s, cs.carrier);
                auto target = leaves_over(s, cs.root);
                std::set<int> seen;
                size_t total = 0;
                for (int c : cover) {
                    auto part = leaves_over(s, c);
                    total += part.size();
                    for (int x : part) CHECK(seen.insert(x).second);  // pairwise disjoint
                }
                CHECK(total == target.size());
                for (int x : target) CHECK(seen.count(x) == 1);
            }
        }
}

namespace {
void all_partitions(const std::vector<int>& xs, size_t i, std::vector<std::vector<int>>& acc,
                    int max_blocks, const std::function<void()>& emit) {
    if (i == xs.size()) {
        emit();
        return;
    }
    for (size_t bi = 0; bi < acc.size(); ++bi) {
        acc[bi].push_back(xs[i]);
        all_partitions(xs, i + 1, acc, max_blocks, emit);
        acc[bi].pop_back();
    }
    if (static_cast<int>(acc.size()) < max_blocks) {
        acc.push_back({xs[i]});
        all_partitions(xs, i + 1, acc, max_blocks, emit);
        acc.pop_back();
    }
}
}  // namespace

// The two equivalences hold on split domains: covers are read off outside the
// subtree, suprema inside it. Jointly they pin down the set equations the
// globularity computation rests on.
TEST_CASE("membership equivalences for convex partitions of a leafless subtree") {
    for (int n = 1; n <= 6; ++n)
        for (const Poset& s : enumerate_trees(n)) {
            auto lvs = leaves(s);
            for (const ConvexSubtree& cs : convex_subtrees(s)) {
                bool has_leaf = false;
                for (int x : cs.carrier)
                    if (std::find(lvs.begin(), lvs.end(), x) != lvs.end()) has_leaf = true;
                if (has_leaf) continue;
                std::vector<std::vector<int>> acc;
                all_partitions(cs.carrier, 0, acc, 3, [&]() {
                    std::vector<ConvexSubtree> blocks;
                    for (const auto& b : acc) {
                        ConvexSubtree piece;
                        if (!validate_convex_subtree(s, b, &piece).ok()) return;
                        blocks.push_back(piece);
                    }
                    auto outer_cover = cover_of(s, cs.carrier);
                    std::set<int> carrier(cs.carrier.begin(), cs.carrier.end());
                    for (int t = 0; t < s.size(); ++t) {
                        bool in_some_cover = false, is_some_sup = false;
                        for (const auto& b : blocks) {
                            auto cov = cover_of(s, b.carrier);
                            if (std::find(cov.begin(), cov.end(), t) != cov.end())
                                in_some_cover = true;
                            if (b.root == t) is_some_sup = true;
                        }
                        bool in_outer =
                            std::find(outer_cover.begin(), outer_cover.end(), t) != outer_cover.end();
                        if (!carrier.count(t))  // (a): cover membership, outside T
                            CHECK(in_some_cover == in_outer);
                        else  // (b): supremum membership, inside T
                            CHECK(is_some_sup == (cs.root == t || in_some_cover));
                        // the set equations behind the globularity identities
                        bool in_sups_minus_covers = is_some_sup && !in_some_cover;
                        bool in_covers_minus_sups = in_some_cover && !is_some_sup;
                        CHECK(in_sups_minus_covers == (cs.root == t));
                        CHECK(in_covers_minus_sups == in_outer);
                    }
                });
            }
        }
}

TEST_CASE("construction rejects malformed posets") {
    CHECK_THROWS_AS(Poset::from_covers({"a", "a"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Poset::from_covers({"  "}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Poset::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}),
                    std::invalid_argument);
    // redundant cover: a<b, b<c and a<c explicitly
    CHECK_THROWS_AS(
        Poset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}),
        std::invalid_argument);
    CHECK_THROWS_AS(Poset::from_covers({"a"}, {{"a", "zz"}}), std::out_of_range);
}
