#include <doctest.h>

#include "helpers.hpp"
#include "ope/fixtures.hpp"
#include "ope/io.hpp"
#include "ope/render.hpp"

using namespace ope;

TEST_CASE("serialize / parse round-trips are byte-stable on the fixtures") {
    for (const std::string& name : fixtures::names()) {
        std::string doc = fixtures::document(name);
        ParsedDocument parsed = parse_document(doc);
        std::string again;
        std::visit([&](const auto& v) { again = serialize(v); }, parsed.value);
        CHECK(again == doc);
        // parse of the re-serialization equals the original parse
        ParsedDocument reparsed = parse_document(again);
        CHECK(reparsed.kind == parsed.kind);
    }
}

TEST_CASE("typed fixture values survive the document round trip") {
    ParsedDocument t3 = parse_document(fixtures::document("T3"));
    CHECK(std::get<Complex>(t3.value) == fixtures::T3());
    ParsedDocument o3 = parse_document(fixtures::document("O3"));
    CHECK(std::get<Hypergraph>(o3.value) == fixtures::O3());
    ParsedDocument f32 = parse_document(fixtures::document("F32"));
    CHECK(std::get<IotaMap>(f32.value) == fixtures::F32());
    ParsedDocument f32d = parse_document(fixtures::document("F32*"));
    CHECK(std::get<ComplexMorphism>(f32d.value) == fixtures::F32_dual());
}

TEST_CASE("duplicate delta entries are a parse error") {
    std::string doc = R"({"kind":"opetope","faces":[["t1","t2"],["y"]],
                          "gamma":{"y":"t1"},"delta":{"y":["t2","t2"]}})";
    CHECK_THROWS_AS(parse_document(doc), ParseError);
}

TEST_CASE("kind declarations are checked against the classification") {
    std::string as_cardinal = fixtures::document("O2");
    as_cardinal.replace(as_cardinal.find("\"opetope\""), 9, "\"cardinal\"");
    ParsedDocument doc = parse_document(as_cardinal);
    CHECK(doc.note == "declared cardinal, classifies as opetope");

    // remove y3 and shrink delta(b): globularity breaks, "opetope" is a lie
    std::string bad = R"({"kind":"opetope",
        "faces":[["t1","t2","t3"],["y1","y2"],["b"]],
        "gamma":{"y1":"t1","y2":"t1","b":"y1"},
        "delta":{"y1":["t3"],"y2":["t2"],"b":["y2"]}})";
    CHECK_THROWS_AS(parse_document(bad), std::invalid_argument);
}

TEST_CASE("syntax errors carry a position") {
    try {
        parse_document("{\"kind\": \n[");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("expected-kind parsing rejects other families") {
    CHECK_THROWS_AS(parse_document(fixtures::document("O2"), DocKind::TreeComplex),
                    std::invalid_argument);
    CHECK_NOTHROW(parse_document(fixtures::document("T2"), DocKind::TreeComplex));
}

TEST_CASE("ascii rendering: columns and nesting depth") {
    std::string art = render(fixtures::T2(), RenderFormat::Ascii);
    // one line per constellation column
    CHECK(std::count(art.begin(), art.end(), '\n') == 3);
    // dimension-0 column nests two circles around the vertex
    std::string first = art.substr(0, art.find('\n'));
    int depth = 0, maxdepth = 0;
    for (char ch : first) {
        if (ch == '(') maxdepth = std::max(maxdepth, ++depth);
        if (ch == ')') --depth;
    }
    CHECK(maxdepth == 2);
    CHECK(first.find("*t3") != std::string::npos);

    Complex point;
    point.kind = ComplexKind::Tree;
    point.levels = {Poset::from_covers({"pt"}, {})};
    CHECK(render(point, RenderFormat::Ascii) == "dim 0 | *pt\n");
}

TEST_CASE("dot rendering nests clusters like the dimension-0 column of T3") {
    std::string dot = render(fixtures::T3(), RenderFormat::Dot);
    // circles y1 > y4 > y5 > y6 over the vertex t4, in nesting order
    size_t y1 = dot.find("cluster_c0_y1");
    size_t y4 = dot.find("cluster_c0_y4");
    size_t y5 = dot.find("cluster_c0_y5");
    size_t y6 = dot.find("cluster_c0_y6");
    size_t t4 = dot.find("v0_t4");
    CHECK(y1 < y4);
    CHECK(y4 < y5);
    CHECK(y5 < y6);
    CHECK(y6 < t4);
    // rendering an opetope goes through its dual
    CHECK(render(fixtures::O3(), RenderFormat::Dot) == dot);
}

TEST_CASE("intro labels replace circles by their codomain faces") {
    std::string own = render(fixtures::O3(), RenderFormat::Ascii);
    std::string intro = render(fixtures::O3(), RenderFormat::Ascii, LabelConvention::Intro);
    CHECK(own != intro);
    // circle y4 in column 0 is labeled by gamma(y4) = t1
    std::string own0 = own.substr(0, own.find('\n'));
    std::string intro0 = intro.substr(0, intro.find('\n'));
    CHECK(own0.find("(y4") != std::string::npos);
    CHECK(intro0.find("(t1") != std::string::npos);
}

TEST_CASE("svg rendering emits one region per circle") {
    std::string svg = render(fixtures::T2(), RenderFormat::Svg);
    CHECK(std::count(svg.begin(), svg.end(), '\n') > 3);
    size_t rects = 0, pos = 0;
    while ((pos = svg.find("<rect", pos)) != std::string::npos) {
        ++rects;
        pos += 5;
    }
    CHECK(rects == 3);  // y2, y3 around t3; b around the level-1 vertices
}
