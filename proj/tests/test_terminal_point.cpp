#include <doctest.h>

#include <numeric>

#include "mmp/terminal_point.hpp"

using namespace mmp;

namespace {

TerminalPoint point(long r, long a, std::vector<GermSeries::Term> terms) {
    return make_terminal_point(r, a, GermSeries(terms));
}

// G = tau^n + z^r (the generic simple-type singular germ).
TerminalPoint simple_point(long r, long a, long n) {
    return point(r, a, {{0, n}, {1, 0}});
}

}  // namespace

TEST_CASE("germ series validation") {
    CHECK_THROWS_AS(GermSeries({{0, 1}, {0, 2}}), ValidationError);
    CHECK_THROWS_AS(GermSeries({{-1, 0}}), ValidationError);
    CHECK_THROWS_AS(GermSeries({{1, -2}}), ValidationError);
    GermSeries g({{1, 1}, {0, 2}});
    CHECK(g.str() == "[(0,2),(1,1)]");
}

TEST_CASE("terminal point construction guards") {
    CHECK_THROWS_AS(point(1, 1, {{0, 1}}), ValidationError);   // r >= 2
    CHECK_THROWS_AS(point(4, 2, {{0, 1}}), ValidationError);   // gcd
    CHECK_THROWS_AS(point(5, 5, {{0, 1}}), ValidationError);   // range
    CHECK_THROWS_AS(point(5, 2, {{1, 1}}), ValidationError);   // no unit, no constant
    CHECK_NOTHROW(point(5, 2, {{1, 0}}));                      // unit term, no constant
    CHECK_NOTHROW(point(5, 2, {{0, 1}}));                      // G = tau
}

TEST_CASE("index") {
    CHECK(index(point(5, 2, {{0, 1}})) == 5);
    CHECK(index(point(3, 1, {{0, 1}})) == 3);
    CHECK(index(classify_index1("xy+tau")) == 1);
}

TEST_CASE("axial multiplicity") {
    // G = tau^2 + tau z^5 + z^10 at r = 5.
    CHECK(axial_multiplicity(point(5, 2, {{0, 2}, {1, 1}, {2, 0}})) == 2);
    CHECK(axial_multiplicity(point(5, 2, {{0, 1}})) == 1);  // G = tau
    CHECK(axial_multiplicity(point(5, 2, {{0, 0}})) == 0);  // unit constant term
    CHECK_THROWS_AS(axial_multiplicity(point(5, 2, {{1, 0}})), ValidationError);
}

TEST_CASE("simple type") {
    auto st = simple_type(point(5, 2, {{0, 2}, {1, 1}, {2, 0}}));
    CHECK_FALSE(st.is_simple);
    CHECK(st.h == 2);

    st = simple_type(point(5, 2, {{0, 1}, {1, 0}}));  // G = tau + z^5
    CHECK(st.is_simple);
    CHECK(st.h == 1);

    st = simple_type(point(5, 2, {{0, 1}}));  // G_s = 0
    CHECK(st.is_simple);
    CHECK_FALSE(st.h.has_value());
}

TEST_CASE("blowup discrepancy formula") {
    CHECK(blowup_discrepancy({Rat(2, 5), Rat(3, 5), Rat(1, 5), Rat(1)}, Rat(1)) == Rat(1, 5));
    CHECK(blowup_discrepancy({Rat(1), Rat(1), Rat(1), Rat(1)}, Rat(2)) == Rat(1));
    for (long r = 2; r <= 50; ++r)
        for (long a = 1; a < r; ++a) {
            if (std::gcd(a, r) != 1) continue;
            CHECK(blowup_discrepancy({Rat(a, r), Rat(r - a, r), Rat(1, r), Rat(1)}, Rat(1)) ==
                  Rat(1, r));
        }
    CHECK_THROWS_AS(blowup_discrepancy({Rat(1, 2), Rat(1, 2)}, Rat(1)), ValidationError);
    CHECK_THROWS_AS(blowup_discrepancy({Rat(0), Rat(1)}, Rat(0)), ValidationError);
}

TEST_CASE("standard blowup on the worked examples") {
    BlowupResult res = standard_blowup(simple_point(5, 2, 3));
    CHECK(res.discrepancy == Rat(1, 5));
    REQUIRE(res.children.size() == 3);
    CHECK(res.children[0].child_index == 2);
    CHECK(res.children[0].chart == BlowupChild::Chart::X);
    CHECK_FALSE(res.children[0].axial.has_value());
    CHECK(res.children[1].child_index == 3);
    CHECK(res.children[2].child_index == 5);
    CHECK(res.children[2].axial == Int(2));

    res = standard_blowup(simple_point(2, 1, 1));
    CHECK(res.discrepancy == Rat(1, 2));
    CHECK(res.children.empty());

    res = standard_blowup(simple_point(3, 2, 2));
    CHECK(res.discrepancy == Rat(1, 3));
    REQUIRE(res.children.size() == 2);
    CHECK(res.children[0].child_index == 2);
    CHECK(res.children[1].child_index == 3);
    CHECK(res.children[1].axial == Int(1));
}

TEST_CASE("standard blowup rejects out-of-contract germs") {
    CHECK_THROWS_AS(standard_blowup(point(5, 2, {{0, 2}, {2, 0}})), ValidationError);  // h = 2
    CHECK_THROWS_AS(standard_blowup(point(5, 2, {{0, 0}})), ValidationError);  // not singular
    CHECK_THROWS_AS(standard_blowup(point(5, 2, {{1, 0}})), ValidationError);  // n infinite
}

TEST_CASE("blowup discrepancy is 1/r across the sweep, children shrink the measure") {
    for (long r = 2; r <= 50; ++r) {
        for (long a = 1; a < r; ++a) {
            if (std::gcd(a, r) != 1) continue;
            for (long n = 1; n <= 5; ++n) {
                TerminalPoint p = simple_point(r, a, n);
                // mu_r-invariance of the defining data.
                CHECK((p.a + (p.r - p.a)) % p.r == 0);
                CHECK((p.r * 1) % p.r == 0);
                BlowupResult res = standard_blowup(p);
                CHECK(res.discrepancy == Rat(1, r));
                CHECK(res.children.size() <= 3);
                for (const auto& c : res.children) {
                    bool smaller_index = c.child_index < r;
                    bool same_index_smaller_axial =
                        c.child_index == r && c.axial && *c.axial < n;
                    CHECK((smaller_index || same_index_smaller_axial));
                }
            }
        }
    }
}

TEST_CASE("G_s = 0 germs blow up the same way") {
    // G = tau^n alone: simple type with empty special part.
    TerminalPoint p = point(7, 3, {{0, 2}});
    BlowupResult res = standard_blowup(p);
    CHECK(res.discrepancy == Rat(1, 7));
    REQUIRE(res.children.size() == 3);
    CHECK(res.children[2].axial == Int(1));
}

TEST_CASE("surface germ types") {
    CHECK(surface_germ_types(point(3, 2, {{0, 1}, {2, 0}}), false) ==
          CyclicQuotientType{18, 11});
    CHECK(surface_germ_types(simple_point(2, 1, 1), false) == CyclicQuotientType{4, 1});
    CHECK(surface_germ_types(simple_point(5, 2, 1), true) == CyclicQuotientType{5, 3});
    // Non-integral direction: no off-curve germ.
    CHECK_THROWS_AS(surface_germ_types(point(5, 2, {{0, 1}}), false), ValidationError);
    CHECK_NOTHROW(surface_germ_types(point(5, 2, {{0, 1}}), true));
}

TEST_CASE("surface germs tie back to the index and the family") {
    for (long r = 2; r <= 20; ++r)
        for (long a = 1; a < r; ++a) {
            if (std::gcd(a, r) != 1) continue;
            for (long h = 1; h * r * r <= 400; ++h) {
                std::vector<GermSeries::Term> terms = {{0, 1}};
                if (h >= 1) terms.push_back({h, 0});
                TerminalPoint p = point(r, a, terms);
                CyclicQuotientType off = surface_germ_types(p, false);
                CHECK(gorenstein_index(off) == r);
                auto fam = germ_family(off);
                REQUIRE(fam.has_value());
                CHECK(fam->h == h);
                CHECK(fam->r == r);
                CHECK(fam->b == mod_inverse(a, r));
                CyclicQuotientType on = surface_germ_types(p, true);
                CHECK(on == CyclicQuotientType{Int(r), mod_inverse(a, r)});
            }
        }
}

TEST_CASE("index-1 classification") {
    CHECK(classify_index1("xyz+tau").variant == Index1Point::Variant::XyzTau);
    CHECK(classify_index1("xy+tau").variant == Index1Point::Variant::XyTau);
    Index1Point rdp = classify_index1("A3");
    CHECK(rdp.variant == Index1Point::Variant::Rdp);
    CHECK(rdp.rdp_kind == AdeLabel{'A', 3});
    CHECK(classify_index1("D4").rdp_kind == AdeLabel{'D', 4});
    CHECK(classify_index1("E8").rdp_kind == AdeLabel{'E', 8});
    CHECK_THROWS_AS(classify_index1("xyzw"), ValidationError);
    CHECK_THROWS_AS(classify_index1("E9"), ValidationError);
    CHECK_THROWS_AS(classify_index1("D3"), ValidationError);
    CHECK_THROWS_AS(classify_index1(""), ValidationError);
}
