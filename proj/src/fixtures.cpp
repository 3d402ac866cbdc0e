#include "ope/fixtures.hpp"

#include "ope/io.hpp"

namespace ope {
namespace fixtures {

namespace {

Poset chain(std::vector<std::string> names_root_first) {
    // names given root first: a > b > c ...
    std::vector<std::pair<std::string, std::string>> covers;
    for (size_t i = 0; i + 1 < names_root_first.size(); ++i)
        covers.emplace_back(names_root_first[i + 1], names_root_first[i]);
    return Poset::from_covers(names_root_first, covers);
}

}  // namespace

std::vector<std::string> names() {
    return {"O1", "O2", "O3", "SCARD", "T1", "T2", "T3", "THK", "F32", "F32*"};
}

bool has(const std::string& name) {
    for (const std::string& n : names())
        if (n == name) return true;
    return name == "F32star";
}

Hypergraph point() { return Hypergraph({{"t"}}, {}, {}); }

Hypergraph O1() {
    return Hypergraph({{"t1", "t2"}, {"y"}}, {{"y", "t1"}}, {{"y", {"t2"}}});
}

Hypergraph O2() {
    return Hypergraph({{"t1", "t2", "t3"}, {"y1", "y2", "y3"}, {"b"}},
                      {{"y1", "t1"}, {"y2", "t1"}, {"y3", "t2"}, {"b", "y1"}},
                      {{"y1", {"t3"}}, {"y2", {"t2"}}, {"y3", {"t3"}}, {"b", {"y2", "y3"}}});
}

Hypergraph O3() {
    return Hypergraph(
        {{"t0", "t1", "t2", "t3", "t4"},
         {"y0", "y1", "y2", "y3", "y4", "y5", "y6"},
         {"b0", "b1", "b2", "b3"},
         {"beta"}},
        {{"y0", "t0"},
         {"y1", "t0"},
         {"y2", "t1"},
         {"y3", "t1"},
         {"y4", "t1"},
         {"y5", "t2"},
         {"y6", "t3"},
         {"b0", "y0"},
         {"b1", "y0"},
         {"b2", "y2"},
         {"b3", "y3"},
         {"beta", "b0"}},
        {{"y0", {"t4"}},
         {"y1", {"t1"}},
         {"y2", {"t4"}},
         {"y3", {"t3"}},
         {"y4", {"t2"}},
         {"y5", {"t3"}},
         {"y6", {"t4"}},
         {"b0", {"y6", "y5", "y4", "y1"}},
         {"b1", {"y2", "y1"}},
         {"b2", {"y6", "y3"}},
         {"b3", {"y4", "y5"}},
         {"beta", {"b1", "b2", "b3"}}});
}

Hypergraph SCARD() {
    return Hypergraph(
        {{"s0", "s1", "s2", "s3", "s4", "s5", "s6", "s7"},
         {"x0", "x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9"},
         {"a0", "a1", "a2"}},
        {{"x0", "s0"},
         {"x1", "s0"},
         {"x2", "s1"},
         {"x3", "s2"},
         {"x4", "s3"},
         {"x5", "s3"},
         {"x6", "s4"},
         {"x7", "s4"},
         {"x8", "s5"},
         {"x9", "s6"},
         {"a0", "x0"},
         {"a1", "x4"},
         {"a2", "x6"}},
        {{"x0", {"s2"}},
         {"x1", {"s1"}},
         {"x2", {"s2"}},
         {"x3", {"s3"}},
         {"x4", {"s7"}},
         {"x5", {"s4"}},
         {"x6", {"s6"}},
         {"x7", {"s5"}},
         {"x8", {"s6"}},
         {"x9", {"s7"}},
         {"a0", {"x1", "x2"}},
         {"a1", {"x9", "x6", "x5"}},
         {"a2", {"x8", "x7"}}});
}

Complex T1() {
    Complex c;
    c.kind = ComplexKind::Tree;
    c.levels = {chain({"t2"}), chain({"y"})};
    c.sigmas = {{{0}}};
    return c;
}

Complex T2() {
    Complex c;
    c.kind = ComplexKind::Tree;
    c.levels = {chain({"t3"}), chain({"y2", "y3"}), chain({"b"})};
    const Poset& l1 = c.levels[1];
    c.sigmas.resize(2);
    c.sigmas[0].assign(l1.size(), {0});
    c.sigmas[1] = {{l1.index_of("y2"), l1.index_of("y3")}};
    for (auto& s : c.sigmas[1]) std::sort(s.begin(), s.end());
    return c;
}

Complex T3() {
    Complex c;
    c.kind = ComplexKind::Tree;
    c.levels = {chain({"t4"}), chain({"y1", "y4", "y5", "y6"}), chain({"b1", "b2", "b3"}),
                chain({"beta"})};
    const Poset& l1 = c.levels[1];
    const Poset& l2 = c.levels[2];
    auto ids = [](const Poset& p, std::vector<std::string> ns) {
        std::vector<int> out;
        for (const auto& n : ns) out.push_back(p.index_of(n));
        std::sort(out.begin(), out.end());
        return out;
    };
    c.sigmas.resize(3);
    c.sigmas[0].assign(l1.size(), {0});
    c.sigmas[1].assign(l2.size(), {});
    c.sigmas[1][l2.index_of("b1")] = ids(l1, {"y1", "y4", "y5", "y6"});
    c.sigmas[1][l2.index_of("b2")] = ids(l1, {"y4", "y5", "y6"});
    c.sigmas[1][l2.index_of("b3")] = ids(l1, {"y4", "y5"});
    c.sigmas[2] = {ids(l2, {"b1", "b2", "b3"})};
    return c;
}

Complex THK() {
    Complex c;
    c.kind = ComplexKind::Thicket;
    Poset l2 = Poset::from_covers({"a0", "a1", "a2"}, {{"a2", "a1"}});
    c.levels = {chain({"s7"}), chain({"x1", "x2", "x3", "x5", "x7", "x8", "x9"}), l2};
    const Poset& l1 = c.levels[1];
    auto ids = [](const Poset& p, std::vector<std::string> ns) {
        std::vector<int> out;
        for (const auto& n : ns) out.push_back(p.index_of(n));
        std::sort(out.begin(), out.end());
        return out;
    };
    c.sigmas.resize(2);
    c.sigmas[0].assign(l1.size(), {0});
    c.sigmas[1].assign(3, {});
    c.sigmas[1][c.levels[2].index_of("a0")] = ids(l1, {"x1", "x2"});
    c.sigmas[1][c.levels[2].index_of("a1")] = ids(l1, {"x5", "x7", "x8", "x9"});
    c.sigmas[1][c.levels[2].index_of("a2")] = ids(l1, {"x7", "x8"});
    return c;
}

IotaMap F32() {
    IotaMap m;
    m.source = O3();
    m.target = O2();
    m.assignment = {{"t0", "t1"}, {"t1", "t1"}, {"t2", "t2"}, {"t3", "t2"}, {"t4", "t3"},
                    {"y0", "y1"}, {"y1", "t1"}, {"y2", "y1"}, {"y3", "y2"}, {"y4", "y2"},
                    {"y5", "t2"}, {"y6", "y3"}, {"b0", "b"},  {"b1", "y1"}, {"b2", "b"},
                    {"b3", "y2"}, {"beta", "b"}};
    return m;
}

ComplexMorphism F32_dual() {
    ComplexMorphism f;
    f.source = T2();
    f.target = T3();
    f.maps.resize(3);
    f.maps[0] = {f.target.levels[0].index_of("t4")};
    f.maps[1].assign(2, -1);
    f.maps[1][f.source.levels[1].index_of("y2")] = f.target.levels[1].index_of("y4");
    f.maps[1][f.source.levels[1].index_of("y3")] = f.target.levels[1].index_of("y6");
    f.maps[2] = {f.target.levels[2].index_of("b2")};
    return f;
}

std::string document(const std::string& name) {
    if (name == "O1") return serialize(O1());
    if (name == "O2") return serialize(O2());
    if (name == "O3") return serialize(O3());
    if (name == "SCARD") return serialize(SCARD());
    if (name == "T1") return serialize(T1());
    if (name == "T2") return serialize(T2());
    if (name == "T3") return serialize(T3());
    if (name == "THK") return serialize(THK());
    if (name == "F32") return serialize(F32());
    if (name == "F32*" || name == "F32star") return serialize(F32_dual());
    throw std::out_of_range("no fixture named '" + name + "'");
}

}  // namespace fixtures
}  // namespace ope
