#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "okbody/pwl.hpp"

#include <random>

using namespace okbody;
using namespace okbody::pwl;

namespace {

Rat q(long n, long d = 1) { return make_rat(n, d); }

PwlExpr A(std::initializer_list<std::pair<const char*, Rat>> coeffs, Rat c) {
    AffineForm f;
    for (const auto& [k, v] : coeffs) f.coefficients[k] = v;
    f.constant = c;
    return PwlExpr::affine(f);
}

std::mt19937 rng(911507);

Rat random_rat(int lo, int hi, int maxden) {
    std::uniform_int_distribution<int> num(lo, hi), den(1, maxden);
    return make_rat(num(rng), den(rng));
}

ratgeom::HPoly interval_domain(const Rat& lo, const Rat& hi) {
    ratgeom::HPoly h;
    h.dim = 1;
    h.inequalities.push_back({{Rat(1)}, lo});
    h.inequalities.push_back({{Rat(-1)}, -hi});
    return h;
}

// The seven-coefficient ledger driving the genus-two family: everything is a
// min of affine forms in (s, t).
struct Ledger {
    PwlExpr e, j, y, r, c, g, n;
    Ledger() {
        e = A({{"s", q(1, 2)}, {"t", q(-1)}}, q(1));
        j = PwlExpr::min({A({{"s", q(-1)}}, q(1)), e});
        y = PwlExpr::scale(q(3, 2), PwlExpr::min({A({{"s", q(1, 6)}}, q(0)), e}));
        r = PwlExpr::min({PwlExpr::sum({j, y}),
                          PwlExpr::sum({PwlExpr::scale(q(1, 3), y), e})});
        c = PwlExpr::min({PwlExpr::scale(q(6), y), e});
        g = PwlExpr::min({PwlExpr::sum({j, r}),
                          PwlExpr::sum({PwlExpr::scale(q(1, 2), j), PwlExpr::scale(q(3, 2), e)})});
        n = PwlExpr::min({PwlExpr::sum({r, g}), PwlExpr::scale(q(3), e)});
    }
};

Env st(const Rat& s, const Rat& t) { return Env{{"s", s}, {"t", t}}; }

}  // namespace

TEST_CASE("affine form algebra") {
    const AffineForm a = af_add(af_var("t"), af_const(q(2)));
    const AffineForm b = af_sub(a, af_var("t"));
    CHECK(b.coefficients.empty());  // zero coefficients are dropped
    CHECK(b.constant == 2);
    CHECK(af_equal(af_scale(q(0), a), af_const(q(0))));
    CHECK(af_eval(a, {{"t", q(5)}}) == 7);
    CHECK_THROWS_AS(af_eval(a, {{"s", q(5)}}), std::invalid_argument);
}

TEST_CASE("eval worked examples") {
    // positive part: (t - b)+ at t=1, b=2
    const PwlExpr p = PwlExpr::pos(A({{"t", q(1)}, {"b", q(-1)}}, q(0)));
    CHECK(eval(p, {{"t", q(1)}, {"b", q(2)}}) == 0);
    CHECK(eval(p, {{"t", q(3)}, {"b", q(2)}}) == 1);

    // j = min{1-s, 1+s/2-t} at (s,t) = (1/2, 5/4)
    const Ledger L;
    CHECK(eval(L.j, st(q(1, 2), q(5, 4))) == 0);

    // n written as min{3j+2y, 3e} at (s,t) = (1/2, 0)
    const PwlExpr n_alt = PwlExpr::min(
        {PwlExpr::sum({PwlExpr::scale(q(3), L.j), PwlExpr::scale(q(2), L.y)}),
         PwlExpr::scale(q(3), L.e)});
    CHECK(eval(n_alt, st(q(1, 2), q(0))) == q(7, 4));
    CHECK(eval(L.n, st(q(1, 2), q(0))) == q(7, 4));
}

TEST_CASE("eval errors on missing parameters") {
    const PwlExpr p = PwlExpr::min({PwlExpr::variable("t"), PwlExpr::variable("b")});
    CHECK_THROWS_WITH_AS(eval(p, {{"t", q(1)}}), "missing parameter: b",
                         std::invalid_argument);
}

TEST_CASE("pos equals max with zero on random inputs") {
    for (int i = 0; i < 200; ++i) {
        const Rat v = random_rat(-6, 6, 4);
        const PwlExpr x = A({{"t", q(2)}}, q(-3));
        CHECK(eval(PwlExpr::pos(x), {{"t", v}}) ==
              eval(PwlExpr::max({x, PwlExpr::constant(q(0))}), {{"t", v}}));
    }
}

TEST_CASE("min is dual to max") {
    for (int i = 0; i < 200; ++i) {
        const Env env{{"s", random_rat(-4, 4, 3)}, {"t", random_rat(-4, 4, 3)}};
        const PwlExpr a = A({{"s", q(1)}, {"t", q(2)}}, q(-1));
        const PwlExpr b = A({{"s", q(-2)}}, q(3));
        const PwlExpr mn = PwlExpr::min({a, b});
        const PwlExpr mx = PwlExpr::max({PwlExpr::scale(q(-1), a), PwlExpr::scale(q(-1), b)});
        CHECK(eval(mn, env) == -eval(mx, env));
    }
}

TEST_CASE("branches: min{t,1} on [0,2]") {
    const PwlExpr e = PwlExpr::min({PwlExpr::variable("t"), PwlExpr::constant(q(1))});
    const auto cells = branches(e, interval_domain(q(0), q(2)), {"t"});
    REQUIRE(cells.size() == 2);
    // sorted by cell vertices: [0,1] with form t, then [1,2] with value 1
    CHECK(af_equal(cells[0].active_form, af_var("t")));
    CHECK(af_equal(cells[1].active_form, af_const(q(1))));
    const auto v0 = ratgeom::hrep_to_vrep(cells[0].guard);
    const auto v1 = ratgeom::hrep_to_vrep(cells[1].guard);
    CHECK(v0.vertices == (std::vector<QVec>{{q(0)}, {q(1)}}));
    CHECK(v1.vertices == (std::vector<QVec>{{q(1)}, {q(2)}}));
}

TEST_CASE("branches: ruled-surface trapezoid splits at t=2") {
    // min{t,b} - x over the trapezoid 0<=x<=min{t,b}, 0<=t<=a+b at (a,b)=(3,2).
    ratgeom::HPoly dom;
    dom.dim = 2;  // coordinates (t, x)
    dom.inequalities.push_back({{q(1), q(0)}, q(0)});    // t >= 0
    dom.inequalities.push_back({{q(-1), q(0)}, q(-5)});  // t <= 5
    dom.inequalities.push_back({{q(0), q(1)}, q(0)});    // x >= 0
    dom.inequalities.push_back({{q(1), q(-1)}, q(0)});   // x <= t
    dom.inequalities.push_back({{q(0), q(-1)}, q(-2)});  // x <= 2
    const PwlExpr f = PwlExpr::sum(
        {PwlExpr::min({PwlExpr::variable("t"), PwlExpr::constant(q(2))}),
         A({{"x", q(-1)}}, q(0))});
    const auto cells = branches(f, dom, {"t", "x"});
    REQUIRE(cells.size() == 2);
    AffineForm left;  // t - x
    left.coefficients = {{"t", q(1)}, {"x", q(-1)}};
    AffineForm right;  // 2 - x
    right.coefficients = {{"x", q(-1)}};
    right.constant = q(2);
    CHECK(af_equal(cells[0].active_form, left));
    CHECK(af_equal(cells[1].active_form, right));
    for (const auto& c : cells) {
        const auto iv = ratgeom::coordinate_range(ratgeom::hrep_to_vrep(c.guard), 0);
        CHECK((iv.lo == 2 || iv.hi == 2));  // both cells meet the t=2 wall
    }
}

TEST_CASE("branches: symmetric-degree coefficient formulas break at t=1,2") {
    // tau = 3 - t; n_i = min{1, tau}; m_i = min{n_j + n_k, tau}.
    const PwlExpr tau = A({{"t", q(-1)}}, q(3));
    const PwlExpr ni = PwlExpr::min({PwlExpr::constant(q(1)), tau});
    const PwlExpr mi = PwlExpr::min({PwlExpr::sum({ni, ni}), tau});
    const auto cells = branches(mi, interval_domain(q(0), q(3)), {"t"});
    REQUIRE(cells.size() == 3);
    std::vector<QVec> walls;
    for (const auto& c : cells) {
        const auto iv = ratgeom::coordinate_range(ratgeom::hrep_to_vrep(c.guard), 0);
        walls.push_back({iv.lo, iv.hi});
    }
    CHECK(walls == (std::vector<QVec>{{q(0), q(1)}, {q(1), q(2)}, {q(2), q(3)}}));
    CHECK(af_equal(cells[0].active_form, af_const(q(2))));
    AffineForm tau_form;
    tau_form.coefficients = {{"t", q(-1)}};
    tau_form.constant = q(3);
    CHECK(af_equal(cells[1].active_form, tau_form));
    CHECK(af_equal(cells[2].active_form, tau_form));
}

TEST_CASE("branch cells cover the domain exactly") {
    const Ledger L;
    ratgeom::HPoly dom;  // pseudoeffective (s,t) range: 0<=s<=1, 0<=t<=1+s/2
    dom.dim = 2;
    dom.inequalities.push_back({{q(1), q(0)}, q(0)});
    dom.inequalities.push_back({{q(-1), q(0)}, q(-1)});
    dom.inequalities.push_back({{q(0), q(1)}, q(0)});
    dom.inequalities.push_back({{q(1, 2), q(-1)}, q(-1)});
    for (const PwlExpr* expr : {&L.j, &L.y, &L.r, &L.c}) {
        const auto cells = branches(*expr, dom, {"s", "t"});
        Rat total(0);
        for (const auto& c : cells) total += ratgeom::volume(ratgeom::hrep_to_vrep(c.guard));
        CHECK(total == ratgeom::volume(ratgeom::hrep_to_vrep(dom)));
    }
}

TEST_CASE("ledger identities and branch certificates at 1000 random points") {
    const Ledger L;
    // identities resolved in closed form: g = (j - y + 3r)/2 and n = -y + 3r
    const PwlExpr g_resolved = PwlExpr::scale(
        q(1, 2), PwlExpr::sum({L.j, PwlExpr::scale(q(-1), L.y), PwlExpr::scale(q(3), L.r)}));
    const PwlExpr n_resolved =
        PwlExpr::sum({PwlExpr::scale(q(-1), L.y), PwlExpr::scale(q(3), L.r)});
    const PwlExpr n_alt = PwlExpr::min(
        {PwlExpr::sum({PwlExpr::scale(q(3), L.j), PwlExpr::scale(q(2), L.y)}),
         PwlExpr::scale(q(3), L.e)});

    ratgeom::HPoly dom;
    dom.dim = 2;
    dom.inequalities.push_back({{q(1), q(0)}, q(0)});
    dom.inequalities.push_back({{q(-1), q(0)}, q(-1)});
    dom.inequalities.push_back({{q(0), q(1)}, q(0)});
    dom.inequalities.push_back({{q(1, 2), q(-1)}, q(-1)});
    const auto cells = branches(L.n, dom, {"s", "t"});
    CHECK(!cells.empty());

    std::uniform_int_distribution<int> num(0, 48), den(49, 53);
    int checked = 0;
    while (checked < 1000) {
        const Rat s = make_rat(num(rng), den(rng));
        const Rat t_hi = 1 + s / 2;
        const Rat t = make_rat(num(rng), den(rng)) * t_hi / 1;
        if (s <= 0 || s >= 1 || t < 0 || t > t_hi) continue;
        const Env env = st(s, t);
        CHECK(eval(L.g, env) == eval(g_resolved, env));
        CHECK(eval(L.n, env) == eval(n_resolved, env));
        CHECK(eval(L.n, env) == eval(n_alt, env));
        // branch certificate: the active cell's form reproduces the value
        const QVec pt{s, t};
        bool found = false;
        for (const auto& c : cells)
            if (ratgeom::contains(c.guard, pt)) {
                CHECK(af_eval(c.active_form, env) == eval(L.n, env));
                found = true;
            }
        CHECK(found);
        ++checked;
    }
}

TEST_CASE("constructor guards") {
    CHECK_THROWS_AS(PwlExpr::min({}), std::invalid_argument);
    CHECK_THROWS_AS(PwlExpr::sum({}), std::invalid_argument);
    ratgeom::HPoly unbounded;
    unbounded.dim = 1;
    unbounded.inequalities.push_back({{q(1)}, q(0)});
    CHECK_THROWS_AS(branches(PwlExpr::variable("t"), unbounded, {"t"}),
                    std::invalid_argument);
}

TEST_CASE("substitution of affine forms for variables") {
    // f = 2a - 3b + 5
    AffineForm f;
    f.coefficients["a"] = q(2);
    f.coefficients["b"] = q(-3);
    f.constant = q(5);
    // a -> s + 1, b stays
    std::map<std::string, AffineForm> repl;
    repl["a"] = af_add(af_var("s"), af_const(q(1)));
    const AffineForm g = af_substitute(f, repl);
    CHECK(af_eval(g, {{"s", q(4)}, {"b", q(2)}}) ==
          af_eval(f, {{"a", q(5)}, {"b", q(2)}}));
    CHECK(g.coefficients.count("a") == 0);

    // substitution commutes with evaluation through min/sum/scale/pos nodes
    const PwlExpr expr = PwlExpr::sum(
        {PwlExpr::min({A({{"a", q(1)}}, q(0)), A({{"b", q(2)}}, q(-1))}),
         PwlExpr::scale(q(1, 2), PwlExpr::pos(A({{"a", q(-1)}, {"b", q(1)}}, q(0))))});
    const PwlExpr swapped = substitute(expr, repl);
    for (long sv = -3; sv <= 3; ++sv)
        for (long bv = -3; bv <= 3; ++bv) {
            const Env direct{{"a", q(sv + 1)}, {"b", q(bv)}};
            const Env via{{"s", q(sv)}, {"b", q(bv)}};
            CHECK(eval(swapped, via) == eval(expr, direct));
        }

    // numeric substitution closes over all variables
    std::map<std::string, AffineForm> nums;
    nums["a"] = af_const(q(7, 2));
    nums["b"] = af_const(q(-1, 3));
    const PwlExpr closed = substitute(expr, nums);
    CHECK(eval(closed, {}) == eval(expr, {{"a", q(7, 2)}, {"b", q(-1, 3)}}));
}
