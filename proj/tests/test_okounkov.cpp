#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "okbody/okounkov.hpp"

using namespace okbody;
using namespace okbody::okounkov;
using ratgeom::HPoly;
using ratgeom::VPoly;
using threefold::Tower;
using threefold::tower;

namespace {

Rat q(long n, long d = 1) { return make_rat(n, d); }

QVec qr(std::initializer_list<Rat> xs) {
    QVec v;
    for (const Rat& x : xs) v.push_back(x);
    return v;
}

QVec qv(std::initializer_list<long> xs) {
    QVec v;
    for (long x : xs) v.push_back(Rat(x));
    return v;
}

std::map<std::string, Rat> vals(std::initializer_list<std::pair<const char*, Rat>> kv) {
    std::map<std::string, Rat> m;
    for (const auto& [k, v] : kv) m[k] = v;
    return m;
}

VPoly hull(std::size_t dim, const std::vector<QVec>& pts) {
    return ratgeom::hull_of_points(dim, pts);
}

/// The two-parameter product family body for degrees a >= b, as an explicit
/// vertex list.
std::vector<QVec> product_body_verts(const Rat& a, const Rat& b) {
    REQUIRE(a >= b);
    return {qr({q(0), q(0), q(0)}), qr({a + b, q(0), q(0)}), qr({a, b, q(0)}),
            qr({b, b, q(0)}),       qr({b, q(0), b}),        qr({a + b, q(0), b})};
}

/// The three-parameter family body for degrees d1 >= d2 >= d3, as an explicit
/// vertex list.
std::vector<QVec> triple_body_verts(const Rat& d1, const Rat& d2, const Rat& d3) {
    REQUIRE(d1 >= d2);
    REQUIRE(d2 >= d3);
    return {qr({q(0), q(0), q(0)}),
            qr({d3, d3, q(0)}),
            qr({d2 + d3, q(0), d2 + d3}),
            qr({d1 + d2 + d3, q(0), q(0)}),
            qr({d1 + d3, q(0), d2 + d3}),
            qr({d1 + d2, q(0), 2 * d3}),
            qr({d2, d3, d2 - d3}),
            qr({d1, d3, d2 - d3}),
            qr({d1 + d2 - d3, d3, q(0)})};
}

NOBody product_body(const Rat& a, const Rat& b) {
    return body(tower("cxp2"), vals({{"a", a}, {"b", b}}));
}

NOBody triple_body(const Rat& d1, const Rat& d2, const Rat& d3) {
    return body(tower("ccc"), vals({{"d1", d1}, {"d2", d2}, {"d3", d3}}));
}

NOBody genus2_body(const Rat& s) { return body(tower("cxjac"), vals({{"s", s}})); }

/// Part of the body at or beyond the given sweep time.
Rat truncated_volume(const NOBody& b, const Rat& t0) {
    HPoly cut = b.hrep;
    QVec normal = qvec_zero(b.dim);
    normal[0] = Rat(1);
    cut.inequalities.push_back({normal, t0});
    return ratgeom::volume(ratgeom::hrep_to_vrep(cut));
}

void check_invariants(const NOBody& b) {
    CHECK(b.dim == b.coords.size());
    CHECK(b.vrep.dim == b.dim);
    CHECK(b.hrep.dim == b.dim);
    CHECK(b.vrep.rays.empty());
    // the body lives in the nonnegative orthant and touches the origin
    for (const QVec& v : b.vrep.vertices)
        for (const Rat& c : v) CHECK(c >= 0);
    bool has_origin = false;
    for (const QVec& v : b.vrep.vertices)
        if (is_zero(v)) has_origin = true;
    CHECK(has_origin);
    CHECK(ratgeom::equal_sets(b.vrep, b.hrep));
}

}  // namespace

TEST_CASE("product family body matches its closed-form vertex lists") {
    // a > b
    const NOBody b32 = product_body(q(3), q(2));
    CHECK(b32.coords == std::vector<std::string>{"t", "x", "y"});
    CHECK(ratgeom::same_generators(b32.vrep, hull(3, product_body_verts(q(3), q(2)))));
    CHECK(ratgeom::volume(b32.vrep) == 6);
    check_invariants(b32);

    // a = b: the hexahedron degenerates to five vertices
    const NOBody b22 = product_body(q(2), q(2));
    const std::vector<QVec> five = {qv({0, 0, 0}), qv({4, 0, 0}), qv({2, 2, 0}),
                                    qv({2, 0, 2}), qv({4, 0, 2})};
    CHECK(ratgeom::same_generators(b22.vrep, hull(3, five)));
    CHECK(ratgeom::same_generators(b22.vrep, hull(3, product_body_verts(q(2), q(2)))));
    CHECK(ratgeom::volume(b22.vrep) == 4);

    // a < b picks up a seventh vertex
    const NOBody b12 = product_body(q(1), q(2));
    const std::vector<QVec> seven = {qv({0, 0, 0}), qv({3, 0, 0}), qv({2, 1, 0}),
                                     qv({1, 1, 0}), qv({2, 0, 2}), qv({3, 0, 2}),
                                     qv({2, 1, 1})};
    CHECK(ratgeom::same_generators(b12.vrep, hull(3, seven)));
    CHECK(ratgeom::volume(b12.vrep) == 2);
    check_invariants(b12);

    // volume closed form a*b^2/2 on a grid
    for (long a = 1; a <= 4; ++a)
        for (long b = 1; b <= 4; ++b)
            CHECK(ratgeom::volume(product_body(q(a), q(b)).vrep) == q(a * b * b, 2));
}

TEST_CASE("triple family body matches its closed-form vertex lists") {
    const NOBody unit = triple_body(q(1), q(1), q(1));
    const std::vector<QVec> tetra = {qv({0, 0, 0}), qv({3, 0, 0}), qv({1, 1, 0}),
                                     qv({2, 0, 2})};
    CHECK(ratgeom::same_generators(unit.vrep, hull(3, tetra)));
    CHECK(ratgeom::volume(unit.vrep) == 1);
    check_invariants(unit);

    const NOBody b432 = triple_body(q(4), q(3), q(2));
    CHECK(ratgeom::same_generators(b432.vrep, hull(3, triple_body_verts(q(4), q(3), q(2)))));
    CHECK(ratgeom::volume(b432.vrep) == 24);
    check_invariants(b432);

    // the body only depends on the multiset of degrees
    const NOBody shuffled = triple_body(q(2), q(5), q(3));
    CHECK(ratgeom::same_generators(shuffled.vrep, hull(3, triple_body_verts(q(5), q(3), q(2)))));
    CHECK(ratgeom::volume(shuffled.vrep) == 30);

    // volume closed form d1*d2*d3 on a grid
    for (long d1 = 1; d1 <= 3; ++d1)
        for (long d2 = 1; d2 <= 3; ++d2)
            for (long d3 = 1; d3 <= 3; ++d3)
                CHECK(ratgeom::volume(triple_body(q(d1), q(d2), q(d3)).vrep) ==
                      q(d1) * q(d2) * q(d3));
}

TEST_CASE("genus-two family body at s = 1/2") {
    const NOBody b = genus2_body(q(1, 2));
    const std::vector<QVec> eight = {
        qr({q(0), q(0), q(0)}),          qr({q(1, 2), q(1, 2), q(0)}),
        qr({q(2, 3), q(1, 2), q(1, 6)}), qr({q(11, 16), q(1, 2), q(0)}),
        qr({q(29, 42), q(10, 21), q(3, 14)}), qr({q(3, 4), q(0), q(3, 4)}),
        qr({q(7, 6), q(0), q(3, 4)}),    qr({q(5, 4), q(0), q(0)})};
    CHECK(ratgeom::same_generators(b.vrep, hull(3, eight)));
    CHECK(ratgeom::volume(b.vrep) == q(1, 8));
    check_invariants(b);

    // volume closed form s^2 (1 - s)
    for (const Rat& s : {q(1, 3), q(1, 2), q(5, 7)})
        CHECK(ratgeom::volume(genus2_body(s).vrep) == s * s * (1 - s));
}

TEST_CASE("body volume matches the sweep volume at every truncation") {
    // 6 vol(body cut to {first coord >= t0}) must reproduce the ray volume
    // computed from triple products - two fully independent routes.
    const Tower cxp2 = tower("cxp2");
    const NOBody b32 = product_body(q(3), q(2));
    for (Rat t0(0); t0 < 5; t0 += q(1, 2))
        CHECK(6 * truncated_volume(b32, t0) ==
              vol_ray(cxp2, vals({{"a", q(3)}, {"b", q(2)}, {"t", t0}})));

    const Tower ccc = tower("ccc");
    const NOBody unit = triple_body(q(1), q(1), q(1));
    for (Rat t0(0); t0 < 3; t0 += q(1, 4))
        CHECK(6 * truncated_volume(unit, t0) ==
              vol_ray(ccc, vals({{"d1", q(1)}, {"d2", q(1)}, {"d3", q(1)}, {"t", t0}})));
    const NOBody b432 = triple_body(q(4), q(3), q(2));
    for (Rat t0(0); t0 < 9; t0 += q(3, 4))
        CHECK(6 * truncated_volume(b432, t0) ==
              vol_ray(ccc, vals({{"d1", q(4)}, {"d2", q(3)}, {"d3", q(2)}, {"t", t0}})));

    const Tower cj = tower("cxjac");
    for (const Rat& s : {q(1, 2), q(2, 3)}) {
        const NOBody b = genus2_body(s);
        const Rat mu = 1 + s / 2;
        for (Rat t0(0); t0 < mu; t0 += mu / 8)
            CHECK(6 * truncated_volume(b, t0) == vol_ray(cj, vals({{"s", s}, {"t", t0}})));
    }
}

TEST_CASE("surface slices agree with slicing the body") {
    // slice_at builds the fiber polygon from the carrier surface; cutting the
    // 3d body at the same time must give the same polygon.
    struct Probe {
        const char* label;
        std::map<std::string, Rat> degrees;
    };
    const std::vector<Probe> probes = {
        {"cxp2", vals({{"a", q(3)}, {"b", q(2)}})},
        {"cxp2", vals({{"a", q(1)}, {"b", q(2)}})},
        {"ccc", vals({{"d1", q(1)}, {"d2", q(1)}, {"d3", q(1)}})},
        {"ccc", vals({{"d1", q(4)}, {"d2", q(3)}, {"d3", q(2)}})},
        {"cxjac", vals({{"s", q(1, 2)}})},
        {"cxjac", vals({{"s", q(3, 7)}})},
    };
    for (const auto& probe : probes) {
        const Tower tw = tower(probe.label);
        const NOBody b = body(tw, probe.degrees);
        std::map<std::string, Rat> v = probe.degrees;
        v["t"] = Rat(0);
        const Rat mu = pwl::eval(tw.mu, v);
        // sample times, including every vertex time of the body (which is
        // where the combinatorics changes)
        std::vector<Rat> times;
        for (int k = 1; k <= 4; ++k) times.push_back(mu * q(k, 5));
        for (const QVec& vert : b.vrep.vertices)
            if (vert[0] > 0) times.push_back(vert[0]);
        for (const Rat& t : times) {
            v["t"] = t;
            const SlicePolygon sl = slice_at(tw, v);
            const VPoly direct = ratgeom::slice_poly(b.vrep, 0, t);
            INFO(probe.label, " t=", rat_to_string(t));
            CHECK(ratgeom::equal_sets(sl.polygon, direct));
            CHECK(sl.t == t);
            if (!sl.polygon.vertices.empty())
                CHECK(ratgeom::coordinate_range(sl.polygon, 0).hi == sl.x_max);
        }
    }
}

TEST_CASE("worked slice examples") {
    // product family at (3, 2), t = 5/2: triangle x + y <= 2
    const Tower cxp2 = tower("cxp2");
    const SlicePolygon tri = slice_at(cxp2, vals({{"a", q(3)}, {"b", q(2)}, {"t", q(5, 2)}}));
    CHECK(tri.component == "Etilde");
    CHECK(tri.x_max == 2);
    CHECK(ratgeom::same_generators(tri.polygon,
                                   hull(2, {qv({0, 0}), qv({2, 0}), qv({0, 2})})));

    // triple family at (1, 1, 1), t = 3/2: a quadrilateral
    const Tower ccc = tower("ccc");
    const SlicePolygon quad = slice_at(
        ccc, vals({{"d1", q(1)}, {"d2", q(1)}, {"d3", q(1)}, {"t", q(3, 2)}}));
    CHECK(quad.x_max == q(3, 4));
    CHECK(ratgeom::same_generators(
        quad.polygon,
        hull(2, {qv({0, 0}), qr({q(0), q(3, 2)}), qr({q(1, 2), q(1)}), qr({q(3, 4), q(0)})})));

    // triple family at (4, 3, 2), t = 13/2: all three corrections active
    const SlicePolygon deep = slice_at(
        ccc, vals({{"d1", q(4)}, {"d2", q(3)}, {"d3", q(2)}, {"t", q(13, 2)}}));
    CHECK(deep.cls == qr({q(9, 2), q(-2), q(-2), q(-5, 2)}));
    CHECK(deep.x_max == q(5, 4));

    // genus-two family at s = 1/2, t = mu: the slice degenerates to a point
    const Tower cj = tower("cxjac");
    const SlicePolygon tip = slice_at(cj, vals({{"s", q(1, 2)}, {"t", q(5, 4)}}));
    CHECK(tip.x_max == 0);
    CHECK(ratgeom::same_generators(tip.polygon, VPoly{2, {qv({0, 0})}, {}}));
}

TEST_CASE("genus-two slice width follows the two-term minimum") {
    // The widest point of the fiber polygon is min{j + c - e,
    // (8/9) c - (1/3) y + r - e} in the ledger coefficients.
    const Tower cj = tower("cxjac");
    for (const Rat& s : {q(1, 2), q(3, 7)})
        for (const Rat& t : {q(1, 2), q(11, 16), q(27, 40), q(7, 10), q(1)}) {
            if (t >= 1 + s / 2) continue;
            const auto v = vals({{"s", s}, {"t", t}});
            const threefold::SigmaDecomp d = psigma(cj, v);
            const Rat j = d.positive_coeffs.at("Jcheck");
            const Rat y = d.positive_coeffs.at("Ycheck");
            const Rat e = d.positive_coeffs.at("Echeck");
            const Rat r = d.positive_coeffs.at("FRcheck");
            const Rat c = d.positive_coeffs.at("FCcheck");
            const Rat expect = rat_min(j + c - e, q(8, 9) * c - y / 3 + r - e);
            INFO("s=", rat_to_string(s), " t=", rat_to_string(t));
            CHECK(slice_at(cj, v).x_max == expect);
        }

    // on s = 1/2 the width plateaus at 1/2 up to t = 11/16, then decreases
    for (const Rat& t : {q(1, 2), q(27, 40), q(11, 16)})
        CHECK(slice_at(cj, vals({{"s", q(1, 2)}, {"t", t}})).x_max == q(1, 2));
    CHECK(slice_at(cj, vals({{"s", q(1, 2)}, {"t", q(3, 4)}})).x_max == q(4, 9));
}

TEST_CASE("genus-two slice height follows the ledger correction formula") {
    // Height of the fiber polygon above x = u:
    //   j + 6y - e - u - (11/8) a - 9 b,
    // with a = max{0, (8j + 3y - 9r + e + u)/11} and b = max{0, y - r - c + e + u}.
    const Tower cj = tower("cxjac");
    for (const auto& [s, t] : std::vector<std::pair<Rat, Rat>>{
             {q(1, 2), q(3, 4)}, {q(1, 2), q(1, 2)}, {q(3, 7), q(2, 3)}}) {
        const auto v = vals({{"s", s}, {"t", t}});
        const threefold::SigmaDecomp d = psigma(cj, v);
        const Rat j = d.positive_coeffs.at("Jcheck");
        const Rat y = d.positive_coeffs.at("Ycheck");
        const Rat e = d.positive_coeffs.at("Echeck");
        const Rat r = d.positive_coeffs.at("FRcheck");
        const Rat c = d.positive_coeffs.at("FCcheck");
        const SlicePolygon sl = slice_at(cj, v);
        for (int k = 0; k <= 4; ++k) {
            const Rat u = sl.x_max * q(k, 4);
            const Rat a = pos_part(q(8) * j + 3 * y - 9 * r + e + u) / 11;
            const Rat bb = pos_part(y - r - c + e + u);
            const Rat expect = j + 6 * y - e - u - q(11, 8) * a - 9 * bb;
            const VPoly fiber = ratgeom::slice_poly(sl.polygon, 0, u);
            const ratgeom::Interval range = ratgeom::coordinate_range(fiber, 0);
            INFO("s=", rat_to_string(s), " t=", rat_to_string(t), " u=", rat_to_string(u));
            CHECK(range.lo == 0);
            CHECK(range.hi == expect);
        }
    }
}

TEST_CASE("one-parameter gluings") {
    const NOBody g2 = glue4d(tower("cxp2"));
    CHECK(g2.coords == std::vector<std::string>{"s", "t", "x", "y"});
    const std::vector<QVec> six = {
        qv({0, 0, 0, 0}), qv({0, 1, 0, 0}), qr({q(1, 2), q(1, 2), q(1, 2), q(0)}),
        qv({1, 0, 0, 0}), qv({1, 1, 0, 0}), qv({1, 1, 0, 1})};
    CHECK(ratgeom::same_generators(g2.vrep, hull(4, six)));
    CHECK(ratgeom::volume(g2.vrep) == q(1, 24));

    const NOBody gj = glue4d(tower("cxjac"));
    const std::vector<QVec> seven = {
        qv({0, 0, 0, 0}),
        qv({0, 1, 0, 0}),
        qr({q(3, 7), q(4, 7), q(4, 7), q(0)}),
        qr({q(6, 7), q(9, 7), q(0), q(9, 7)}),
        qv({1, 0, 0, 0}),
        qr({q(1), q(4, 3), q(0), q(4, 3)}),
        qr({q(1), q(3, 2), q(0), q(0)}),
    };
    CHECK(ratgeom::same_generators(gj.vrep, hull(4, seven)));
    CHECK(ratgeom::volume(gj.vrep) == q(1, 12));

    CHECK_THROWS_AS(glue4d(tower("ccc")), std::invalid_argument);
}

TEST_CASE("gluing slices reproduce the per-degree bodies") {
    const NOBody g2 = glue4d(tower("cxp2"));
    const NOBody gj = glue4d(tower("cxjac"));
    for (long k = 1; k <= 9; ++k) {
        const Rat s0 = q(k, 10);
        CHECK(ratgeom::equal_sets(ratgeom::slice_poly(g2.vrep, 0, s0),
                                  product_body(1 - s0, s0).vrep));
        CHECK(ratgeom::equal_sets(ratgeom::slice_poly(gj.vrep, 0, s0),
                                  genus2_body(s0).vrep));
    }
}

TEST_CASE("curve degree bound and the projected shadow") {
    const Tower cxp2 = tower("cxp2");
    CHECK(seshadri_curve(cxp2, vals({{"a", q(3)}, {"b", q(2)}})) == 4);
    const ProjectionCheck flat = projection_area_check(cxp2, vals({{"a", q(3)}, {"b", q(2)}}));
    CHECK(flat.lhs == 4);
    CHECK(flat.rhs == 4);
    CHECK(flat.equality);

    // the bound is strict once a < b
    const ProjectionCheck strict = projection_area_check(cxp2, vals({{"a", q(1)}, {"b", q(3)}}));
    CHECK(strict.lhs == 6);
    CHECK(strict.rhs == 5);
    CHECK_FALSE(strict.equality);

    const Tower ccc = tower("ccc");
    const ProjectionCheck t1 = projection_area_check(
        ccc, vals({{"d1", q(1)}, {"d2", q(1)}, {"d3", q(1)}}));
    CHECK(t1.lhs == 2);
    CHECK(t1.equality);
    const ProjectionCheck t432 = projection_area_check(
        ccc, vals({{"d1", q(4)}, {"d2", q(3)}, {"d3", q(2)}}));
    CHECK(t432.lhs == 12);
    CHECK(t432.equality);

    const Tower cj = tower("cxjac");
    const ProjectionCheck half = projection_area_check(cj, vals({{"s", q(1, 2)}}));
    CHECK(half.lhs == q(1, 2));
    CHECK(half.rhs == q(59, 126));
    CHECK_FALSE(half.equality);
    const ProjectionCheck th37 = projection_area_check(cj, vals({{"s", q(3, 7)}}));
    CHECK(th37.lhs == q(18, 49));
    CHECK(th37.equality);
    const ProjectionCheck quarter = projection_area_check(cj, vals({{"s", q(1, 4)}}));
    CHECK(quarter.lhs == q(1, 8));
    CHECK(quarter.equality);
    CHECK(projection_area_check(cj, vals({{"s", q(6, 7)}})).lhs == q(16, 49));
}

TEST_CASE("input validation") {
    const Tower cxp2 = tower("cxp2");
    CHECK_THROWS_AS(body(cxp2, vals({{"a", q(1)}})), std::invalid_argument);
    CHECK_THROWS_AS(body(cxp2, vals({{"a", q(1)}, {"b", q(0)}})), std::domain_error);
    CHECK_THROWS_AS(body(cxp2, vals({{"a", q(-1)}, {"b", q(2)}})), std::domain_error);
    CHECK_THROWS_AS(slice_at(cxp2, vals({{"a", q(1)}, {"b", q(1)}})), std::invalid_argument);
    CHECK_THROWS_AS(slice_at(cxp2, vals({{"a", q(1)}, {"b", q(1)}, {"t", q(0)}})),
                    std::domain_error);
    CHECK_THROWS_AS(slice_at(cxp2, vals({{"a", q(1)}, {"b", q(1)}, {"t", q(5, 2)}})),
                    std::domain_error);
    CHECK_THROWS_AS(seshadri_curve(cxp2, vals({{"b", q(1)}})), std::invalid_argument);
}
