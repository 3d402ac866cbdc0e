#include <doctest.h>

#include "helpers.hpp"
#include "ope/fixtures.hpp"
#include "ope/omega.hpp"

using namespace ope;

namespace {

std::shared_ptr<const Hypergraph> host_of(const Hypergraph& h) {
    return std::make_shared<const Hypergraph>(h);
}

Cell whole(const std::shared_ptr<const Hypergraph>& host, int level) {
    std::vector<std::vector<int>> carrier(host->dim() + 1);
    for (int k = 0; k <= host->dim(); ++k)
        for (int i = 0; i < host->count(k); ++i) carrier[k].push_back(i);
    return make_cell(host, carrier, level);
}

std::set<std::string> level_names(const Cell& c, int k) {
    std::set<std::string> out;
    if (k < static_cast<int>(c.carrier.size()))
        for (int i : c.carrier[k]) out.insert(c.host->faces(k)[i]);
    return out;
}

}  // namespace

TEST_CASE("boundaries of (O2, 2) match the formulas") {
    auto host = host_of(fixtures::O2());
    Cell c = whole(host, 2);

    Cell cod = boundary(c, Side::Codomain, 1);
    CHECK(level_names(cod, 1) == std::set<std::string>{"y1"});
    CHECK(level_names(cod, 0) == std::set<std::string>{"t1", "t3"});  // iota(b) = {t2} removed
    CHECK(cod.level == 1);

    Cell dom = boundary(c, Side::Domain, 1);
    CHECK(level_names(dom, 1) == std::set<std::string>{"y2", "y3"});
    CHECK(level_names(dom, 0) == std::set<std::string>{"t1", "t2", "t3"});

    // below the cut the carrier is untouched
    Cell dom0 = boundary(c, Side::Domain, 0);
    CHECK(level_names(dom0, 0) == std::set<std::string>{"t3"});
    CHECK_THROWS_AS(boundary(c, Side::Domain, 2), std::out_of_range);
}

TEST_CASE("identity raises the level and its boundary returns the cell") {
    auto host = host_of(fixtures::O2());
    Cell c = whole(host, 2);
    Cell id = identity_cell(c);
    CHECK(id.level == 3);
    CHECK_FALSE(id.proper());
    CHECK(identity_cell(id).level == 4);
    CHECK(boundary(id, Side::Domain, 2) == c);
    CHECK(boundary(id, Side::Codomain, 2) == c);
}

TEST_CASE("composition in SCARD glues at the shared boundary") {
    auto host = host_of(fixtures::SCARD());
    Cell left = make_cell(host, face_closure(*host, {host->face("a0")}), 2);
    Cell right = make_cell(host, face_closure(*host, {host->face("x3")}), 2);

    CHECK(level_names(boundary(left, Side::Domain, 0), 0) == std::set<std::string>{"s2"});
    CHECK(level_names(boundary(right, Side::Codomain, 0), 0) == std::set<std::string>{"s2"});

    Cell glued = compose_cells(left, right, 0);
    CHECK(level_names(glued, 0) == std::set<std::string>{"s0", "s1", "s2", "s3"});
    CHECK(level_names(glued, 1) == std::set<std::string>{"x0", "x1", "x2", "x3"});
    CHECK(level_names(glued, 2) == std::set<std::string>{"a0"});
    CHECK(glued.level == 2);
}

TEST_CASE("units act trivially") {
    auto host = host_of(fixtures::O2());
    Cell c = whole(host, 2);
    Cell unit{host, boundary(c, Side::Domain, 1).carrier, 2};
    CHECK(compose_cells(c, unit, 1) == c);
}

TEST_CASE("a cell does not compose with itself across a mismatched boundary") {
    auto host = host_of(fixtures::O2());
    Cell c = whole(host, 2);
    CHECK_THROWS_AS(compose_cells(c, c, 1), std::invalid_argument);
}

TEST_CASE("omega laws pass on the fixtures at level 3") {
    CHECK(check_omega_laws(fixtures::O2(), 3).ok());
    CHECK(check_omega_laws(fixtures::O3(), 3).ok());
    CHECK(check_omega_laws(fixtures::SCARD(), 3).ok());
}

TEST_CASE("omega laws also pass under the set-level iota convention on O2") {
    CHECK(check_omega_laws(fixtures::O2(), 3, IotaConvention::SetLevel).ok());
}

TEST_CASE("boundary carriers classify as cardinals") {
    auto host = host_of(fixtures::O3());
    Cell c = whole(host, 3);
    for (int k = 0; k < 3; ++k)
        for (Side s : {Side::Domain, Side::Codomain}) {
            Cell b = boundary(c, s, k);
            CHECK(sub_hypergraph(*host, b.carrier).is_cardinal());
        }
}

TEST_CASE("cells reject carriers that are not sub-cardinals") {
    auto host = host_of(fixtures::O2());
    // {t1, t3} alone: not linear under <+ restricted? t3 <+ t1 via y1 which is
    // absent, so the sub-structure has an empty upper order on two points.
    std::vector<std::vector<int>> carrier{
        {host->face("t1").idx, host->face("t3").idx}};
    CHECK_THROWS_AS(make_cell(host, carrier, 1), std::invalid_argument);
}
