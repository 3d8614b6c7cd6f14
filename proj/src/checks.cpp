#include "okbody/checks.hpp"

#include "okbody/okounkov.hpp"
#include "okbody/surface.hpp"
#include "okbody/threefold.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace okbody::checks {
namespace {

using pwl::AffineForm;
using pwl::PwlExpr;
using ratgeom::HPoly;
using ratgeom::QCone;
using ratgeom::VPoly;
using surface::SurfaceModel;
using threefold::SigmaDecomp;
using threefold::Tower;

Rat q(long n, long d = 1) { return make_rat(n, d); }

QVec qv(std::initializer_list<long> xs) {
    QVec v;
    for (long x : xs) v.push_back(Rat(x));
    return v;
}

QVec qr(std::initializer_list<Rat> xs) {
    QVec v;
    for (const Rat& x : xs) v.push_back(x);
    return v;
}

std::map<std::string, Rat> vals(std::initializer_list<std::pair<const char*, Rat>> kv) {
    std::map<std::string, Rat> m;
    for (const auto& [k, v] : kv) m[k] = v;
    return m;
}

std::string str(const Rat& r) { return rat_to_string(r); }
std::string str(const QVec& v) { return ratgeom::to_string(v); }

template <class... Ts>
std::string cat(const Ts&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

/// Returns the failure detail when `cond` is false.
#define REQ(cond, ...)                       \
    do {                                     \
        if (!(cond)) return cat(__VA_ARGS__); \
    } while (0)

/// Deterministic random draws; every check owns its own seed.
struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }

    static long floor_to_long(const Rat& r) {
        Int fl = numerator(r) / denominator(r);
        if (r < 0 && fl * denominator(r) != numerator(r)) --fl;
        return fl.convert_to<long>();
    }

    /// Uniform-ish rational in [lo, hi] with denominator at most maxden.
    Rat rational(const Rat& lo, const Rat& hi, long maxden) {
        const long den = integer(2, maxden);
        const Rat l = lo * den;
        const Rat h = hi * den;
        const Rat negl = -l;
        const long nlo = -floor_to_long(negl);
        const long nhi = floor_to_long(h);
        if (nlo >= nhi) return lo;
        return make_rat(integer(nlo, nhi), den);
    }

    /// Draw strictly inside (lo, hi).
    Rat rational_strict(const Rat& lo, const Rat& hi, long maxden) {
        for (int i = 0; i < 64; ++i) {
            const Rat r = rational(lo, hi, maxden);
            if (r > lo && r < hi) return r;
        }
        const Rat mid = (lo + hi) / 2;
        return mid;
    }
};

VPoly hull(std::size_t dim, const std::vector<QVec>& pts) {
    return ratgeom::hull_of_points(dim, pts);
}

Rat neg_coeff(const surface::ZariskiDecomp& z, const std::string& name) {
    const auto it = z.negative_coeffs.find(name);
    return it == z.negative_coeffs.end() ? Rat(0) : it->second;
}

// ---------------------------------------------------------------------------
// kernel tier
// ---------------------------------------------------------------------------

std::string check_polytope_round_trips() {
    Rng rng(481299101);
    const Rat lo(-4), hi(4);
    for (int i = 0; i < 100; ++i) {
        const std::size_t dim = 1 + static_cast<std::size_t>(i % 5);
        const long npts = static_cast<long>(dim) + 1 + rng.integer(0, 3);
        std::vector<QVec> pts;
        for (long p = 0; p < npts; ++p) {
            QVec x;
            for (std::size_t c = 0; c < dim; ++c) x.push_back(rng.rational(lo, hi, 3));
            pts.push_back(x);
        }
        const VPoly v = ratgeom::hull_of_points(dim, pts);
        const HPoly h = ratgeom::vrep_to_hrep(v);
        const VPoly v2 = ratgeom::hrep_to_vrep(h);
        REQ(ratgeom::equal_sets(v, v2), "instance ", i, " (dim ", dim,
            "): V->H->V changed the point set");
        REQ(ratgeom::equal_sets(v2, h), "instance ", i, " (dim ", dim,
            "): final V-rep and H-rep disagree");
    }
    return {};
}

bool cone_holds(const ratgeom::ConeHRep& h, const QVec& x) {
    for (const QVec& row : h.inequality_rows)
        if (dot(row, x) < 0) return false;
    for (const QVec& row : h.equality_rows)
        if (dot(row, x) != 0) return false;
    return true;
}

std::string check_cone_duality() {
    Rng rng(903314221);
    for (int i = 0; i < 50; ++i) {
        const std::size_t dim = 2 + static_cast<std::size_t>(i % 3);
        QCone c;
        c.dim = dim;
        const long nrays = 2 + rng.integer(0, 3);
        for (long r = 0; r < nrays; ++r) {
            QVec x;
            for (std::size_t k = 0; k < dim; ++k) x.push_back(Rat(rng.integer(-3, 3)));
            if (!is_zero(x)) c.rays.push_back(x);
        }
        if (c.rays.empty()) {
            QVec e1 = qvec_zero(dim);
            e1[0] = Rat(1);
            c.rays.push_back(e1);
        }
        const QCone dd = ratgeom::dual_cone(ratgeom::dual_cone(c));
        const auto hc = ratgeom::cone_to_inequalities(c);
        const auto hdd = ratgeom::cone_to_inequalities(dd);
        for (const QVec& r : c.rays)
            REQ(cone_holds(hdd, r), "instance ", i, ": generator ", str(r),
                " escapes the double dual");
        for (const QVec& r : dd.rays)
            REQ(cone_holds(hc, r), "instance ", i, ": double-dual ray ", str(r),
                " escapes the cone");
        for (const QVec& l : dd.lineality) {
            const QVec nl = scale(Rat(-1), l);
            REQ(cone_holds(hc, l) && cone_holds(hc, nl), "instance ", i,
                ": double-dual line ", str(l), " escapes the cone");
        }
    }
    return {};
}

std::string check_volume_additivity() {
    Rng rng(771200413);
    const Rat lo(-3), hi(3);
    for (int i = 0; i < 50; ++i) {
        const std::size_t dim = 2 + static_cast<std::size_t>(i % 3);
        const long npts = static_cast<long>(dim) + 3 + rng.integer(0, 3);
        std::vector<QVec> pts;
        for (long p = 0; p < npts; ++p) {
            QVec x;
            for (std::size_t c = 0; c < dim; ++c) x.push_back(rng.rational(lo, hi, 2));
            pts.push_back(x);
        }
        const VPoly v = ratgeom::hull_of_points(dim, pts);
        QVec centroid = qvec_zero(dim);
        for (const QVec& p : v.vertices) centroid = add(centroid, p);
        centroid = scale(make_rat(1, static_cast<long>(v.vertices.size())), centroid);
        QVec normal = qvec_zero(dim);
        while (is_zero(normal))
            for (std::size_t c = 0; c < dim; ++c) normal[c] = Rat(rng.integer(-2, 2));
        const Rat cval = dot(normal, centroid);
        const Rat ncval = -cval;
        const QVec nnormal = scale(Rat(-1), normal);
        const HPoly h = ratgeom::vrep_to_hrep(v);
        HPoly left = h, right = h;
        left.inequalities.push_back({normal, cval});
        right.inequalities.push_back({nnormal, ncval});
        const Rat vol = ratgeom::volume(v);
        const Rat vl = ratgeom::volume(ratgeom::hrep_to_vrep(left));
        const Rat vr = ratgeom::volume(ratgeom::hrep_to_vrep(right));
        const Rat sum = vl + vr;
        REQ(sum == vol, "instance ", i, ": split volumes ", str(vl), " + ", str(vr),
            " != ", str(vol));
    }
    return {};
}

std::string check_ledger_branch_certificates() {
    const Tower tw = threefold::tower("cxjac");
    Rng rng(6612007);
    std::vector<std::pair<std::string, const PwlExpr*>> entries;
    for (const auto& [name, e] : tw.positive_ledger) entries.emplace_back(name, &e);
    for (const auto& [name, e] : tw.negative_ledger) entries.emplace_back("N:" + name, &e);
    for (int outer = 0; outer < 40; ++outer) {
        const Rat s = rng.rational_strict(Rat(0), Rat(1), 48);
        std::map<std::string, AffineForm> repl;
        repl["s"] = pwl::af_const(s);
        const Rat mu = pwl::eval(tw.mu, {{"s", s}});
        const Rat nmu = -mu;
        HPoly dom;
        dom.dim = 1;
        dom.inequalities = {{qr({Rat(1)}), Rat(0)}, {qr({Rat(-1)}), nmu}};
        std::vector<PwlExpr> subbed;
        std::vector<std::vector<pwl::BranchCell>> charts;
        for (const auto& [name, e] : entries) {
            subbed.push_back(pwl::substitute(*e, repl));
            charts.push_back(pwl::branches(subbed.back(), dom, {"t"}));
        }
        for (int inner = 0; inner < 25; ++inner) {
            const Rat t = rng.rational(Rat(0), mu, 60);
            const pwl::Env env = {{"t", t}};
            for (std::size_t k = 0; k < entries.size(); ++k) {
                const Rat expect = pwl::eval(subbed[k], env);
                const Rat direct = pwl::eval(*entries[k].second, {{"s", s}, {"t", t}});
                REQ(expect == direct, "entry ", entries[k].first, " at s=", str(s),
                    " t=", str(t), ": substitution changed the value");
                bool covered = false;
                for (const auto& cell : charts[k]) {
                    if (!ratgeom::contains(cell.guard, qr({t}))) continue;
                    covered = true;
                    const Rat active = pwl::af_eval(cell.active_form, env);
                    REQ(active == expect, "entry ", entries[k].first, " at s=", str(s),
                        " t=", str(t), ": active branch gives ", str(active), " != ",
                        str(expect));
                }
                REQ(covered, "entry ", entries[k].first, ": no branch cell covers s=",
                    str(s), " t=", str(t));
            }
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// surfaces tier
// ---------------------------------------------------------------------------

std::string check_zariski_product_form() {
    const SurfaceModel m = surface::standard_model("two_curves");
    Rng rng(31077211);
    for (int i = 0; i < 100; ++i) {
        const long d1 = rng.integer(1, 8);
        const long d2 = rng.integer(1, d1);
        const Rat tmax(d1 + d2);
        const Rat t = rng.rational(Rat(0), tmax, 60);
        const Rat tau = tmax - t;
        const Rat a = rat_min(Rat(d1), tau);
        const Rat b = rat_min(Rat(d2), tau);
        const Rat e3 = tau - a - b;
        const Rat mt = -t;
        const QVec cls = qr({Rat(d1), Rat(d2), mt});
        const auto z = surface::zariski(m, {cls});
        const QVec expect = qr({a, b, e3});
        REQ(z.positive.cls == expect, "d=(", d1, ",", d2, ") t=", str(t),
            ": positive part ", str(z.positive.cls), " != ", str(expect));
        const Rat n1 = Rat(d1) - tau;
        const Rat n2 = Rat(d2) - tau;
        const Rat x1 = pos_part(n1), x2 = pos_part(n2);
        REQ(neg_coeff(z, "fbar1") == x1 && neg_coeff(z, "fbar2") == x2,
            "d=(", d1, ",", d2, ") t=", str(t), ": negative coefficients (",
            str(neg_coeff(z, "fbar1")), ",", str(neg_coeff(z, "fbar2")), ") != (",
            str(x1), ",", str(x2), ")");
        const std::size_t expected_supp =
            static_cast<std::size_t>(x1 > 0) + static_cast<std::size_t>(x2 > 0);
        REQ(z.negative_coeffs.size() == expected_supp, "d=(", d1, ",", d2, ") t=",
            str(t), ": unexpected negative support size ", z.negative_coeffs.size());
    }
    return {};
}

std::string check_zariski_diagonal_form() {
    const SurfaceModel m = surface::standard_model("two_curves_diagonal");
    Rng rng(92215031);
    for (int i = 0; i < 100; ++i) {
        const long d1 = rng.integer(2, 8);
        const long d2 = rng.integer(2, d1);
        const Rat tmax(d1 + d2);
        const Rat t = rng.rational(Rat(0), tmax, 60);
        const Rat tau = tmax - t;
        const Rat tau1 = tau + 1;
        const Rat a = rat_min(Rat(d1), tau1);
        const Rat b = rat_min(Rat(d2), tau1);
        const QVec cls = qr({Rat(d1), Rat(d2), Rat(1), tau});
        const auto z = surface::zariski(m, {cls});
        const QVec expect = qr({a, b, Rat(1), tau});
        REQ(z.positive.cls == expect, "d=(", d1, ",", d2, ") t=", str(t),
            ": positive part ", str(z.positive.cls), " != ", str(expect));
        const Rat x1 = Rat(d1) - a;
        const Rat x2 = Rat(d2) - b;
        REQ(neg_coeff(z, "fbar1") == x1 && neg_coeff(z, "fbar2") == x2 &&
                neg_coeff(z, "diag") == 0 && neg_coeff(z, "E") == 0,
            "d=(", d1, ",", d2, ") t=", str(t), ": negative part off the fibers");
    }
    return {};
}

std::string check_zariski_jacobian_form() {
    const SurfaceModel m = surface::standard_model("genus2_jacobian");
    Rng rng(55120839);
    const Rat nef_end = q(4, 3);
    const Rat psef_end = q(3, 2);
    for (int i = 0; i < 100; ++i) {
        const Rat t = rng.rational(Rat(0), psef_end, 60);
        const Rat mt = -t;
        const QVec cls = qr({Rat(1), mt});
        const auto z = surface::zariski(m, {cls});
        if (t <= nef_end) {
            REQ(z.positive.cls == cls && z.negative_coeffs.empty(), "t=", str(t),
                ": nef range decomposition is not trivial");
        } else {
            const Rat w = 9 - 6 * t;
            const Rat we = w * q(-4, 3);
            const QVec expect = qr({w, we});
            const Rat rcoeff = (3 * t - 4) / 2;
            REQ(z.positive.cls == expect, "t=", str(t), ": positive part ",
                str(z.positive.cls), " != ", str(expect));
            REQ(z.negative_coeffs.size() == 1 && neg_coeff(z, "Rbar") == rcoeff,
                "t=", str(t), ": negative part is not ", str(rcoeff), " Rbar");
        }
    }
    return {};
}

const std::vector<QVec>& symmetric_nef_rows() {
    static const std::vector<QVec> rows = {
        qv({-11, 0, 0, 6, 0}), qv({0, 1, 1, 0, 0}),  qv({0, -3, 0, 0, 1}),
        qv({0, 0, -1, 0, 0}),  qv({1, 0, 0, -2, 1}), qv({0, 1, 0, 1, -1})};
    return rows;
}

std::string check_symmetric_nef_system() {
    const auto s = surface::p2blow7_symmetric_cones();
    const auto& rows = symmetric_nef_rows();
    REQ(s.nef_ineqs.inequalities.size() == 6, "expected 6 nefness conditions, found ",
        s.nef_ineqs.inequalities.size());
    for (std::size_t i = 0; i < 6; ++i) {
        REQ(s.nef_ineqs.inequalities[i].normal == rows[i], "condition ", i, ": ",
            str(s.nef_ineqs.inequalities[i].normal), " != ", str(rows[i]));
        REQ(s.nef_ineqs.inequalities[i].offset == 0, "condition ", i,
            " has a nonzero offset");
    }
    // the derived conditions really cut out the nef generators
    for (const QVec& g : s.nef_gens)
        for (const QVec& row : rows)
            REQ(dot(row, g) >= 0, "nef generator ", str(g), " violates ", str(row));
    return {};
}

std::string check_symmetric_dual_cones() {
    const auto s = surface::p2blow7_symmetric_cones();
    QCone effc;
    effc.dim = 5;
    effc.rays = s.eff_gens;
    const QCone nef_dual = ratgeom::dual_cone(effc, s.pairing);
    REQ(nef_dual.lineality.empty(), "dual of the effective cone has lineality");
    REQ(nef_dual.rays == s.nef_gens, "dual of the 6 effective generators is not the ",
        "8 recorded nef generators (", nef_dual.rays.size(), " rays)");
    QCone nefc;
    nefc.dim = 5;
    nefc.rays = s.nef_gens;
    const QCone eff_dual = ratgeom::dual_cone(nefc, s.pairing);
    REQ(eff_dual.lineality.empty(), "dual of the nef cone has lineality");
    REQ(eff_dual.rays == s.eff_gens, "dual of the 8 nef generators is not the ",
        "6 recorded effective generators (", eff_dual.rays.size(), " rays)");
    return {};
}

// ---------------------------------------------------------------------------
// threefolds tier
// ---------------------------------------------------------------------------

std::string check_volume_form_product() {
    const Tower tw = threefold::tower("cxp2");
    Rng rng(5500917);
    for (int i = 0; i < 50; ++i) {
        const Rat a = rng.rational_strict(Rat(0), Rat(6), 4);
        const Rat b = rng.rational_strict(Rat(0), Rat(6), 4);
        const Rat hi = a + b;
        const Rat t = rng.rational(Rat(0), hi, 24);
        const Rat m1 = rat_min(a, hi - t);
        const Rat m2 = rat_min(t, b);
        const Rat p = pos_part(t - a);
        const Rat expect = 3 * m1 * b * b - m2 * m2 * m2 + p * p * p;
        const Rat got = threefold::vol_ray(tw, vals({{"a", a}, {"b", b}, {"t", t}}));
        REQ(got == expect, "a=", str(a), " b=", str(b), " t=", str(t), ": volume ",
            str(got), " != ", str(expect));
    }
    return {};
}

std::string check_volume_form_triple() {
    const Tower tw = threefold::tower("ccc");
    Rng rng(79120421);
    for (int i = 0; i < 50; ++i) {
        std::vector<Rat> d;
        for (int k = 0; k < 3; ++k) d.push_back(rng.rational_strict(Rat(0), Rat(6), 4));
        std::sort(d.begin(), d.end(), [](const Rat& x, const Rat& y) { return x > y; });
        const Rat total = d[0] + d[1] + d[2];
        const Rat t = rng.rational(Rat(0), total, 24);
        const Rat tau = total - t;
        QVec n, m, c;
        for (int k = 0; k < 3; ++k) n.push_back(rat_min(d[k], tau));
        for (int k = 0; k < 3; ++k) {
            const Rat pairsum = n[(k + 1) % 3] + n[(k + 2) % 3];
            m.push_back(rat_min(pairsum, tau));
            c.push_back(pairsum - m[k]);
        }
        const Rat sn = n[0] + n[1] + n[2];
        const Rat sd = sn - tau;
        Rat lin(0), sq(0), cub(0);
        for (int k = 0; k < 3; ++k) {
            lin += n[k] * c[k] * c[k];
            sq += c[k] * c[k];
            cub += c[k] * c[k] * c[k];
        }
        const Rat expect =
            6 * n[0] * n[1] * n[2] - sd * sd * sd - 3 * lin + 3 * sd * sq - 2 * cub;
        const Rat got = threefold::vol_ray(
            tw, vals({{"d1", d[0]}, {"d2", d[1]}, {"d3", d[2]}, {"t", t}}));
        REQ(got == expect, "d=(", str(d[0]), ",", str(d[1]), ",", str(d[2]), ") t=",
            str(t), ": volume ", str(got), " != ", str(expect));
    }
    return {};
}

std::string check_volume_form_jacobian() {
    const Tower tw = threefold::tower("cxjac");
    Rng rng(90415031);
    for (int i = 0; i < 50; ++i) {
        const Rat s = rng.rational_strict(Rat(0), Rat(1), 40);
        const Rat mu = pwl::eval(tw.mu, {{"s", s}});
        const Rat t = rng.rational(Rat(0), mu, 40);
        const auto v = vals({{"s", s}, {"t", t}});
        const SigmaDecomp d = threefold::psigma(tw, v);
        const Rat j = d.positive_coeffs.at("Jcheck");
        const Rat y = d.positive_coeffs.at("Ycheck");
        const Rat e = d.positive_coeffs.at("Echeck");
        const Rat r = d.positive_coeffs.at("FRcheck");
        const Rat c = d.positive_coeffs.at("FCcheck");
        const Rat u = j + y - r;
        const Rat w = 6 * y - c;
        const Rat base = j + 6 * y - e;
        const Rat expect = 96 * j * y * y - base * base * base +
                           9 * u * u * (j + 2 * r - 3 * e) - w * w * (3 * e - 6 * y - 2 * c);
        const Rat got = threefold::vol_ray(tw, v);
        REQ(got == expect, "s=", str(s), " t=", str(t), ": volume ", str(got),
            " != ", str(expect));
    }
    return {};
}

/// Breakpoints of t -> psigma over [0, mu] at fixed degrees, from the branch
/// cells of every ledger entry.
std::vector<Rat> sweep_breakpoints(const Tower& tw,
                                   const std::map<std::string, Rat>& degrees) {
    std::map<std::string, AffineForm> repl;
    for (const auto& [k, v] : degrees) repl[k] = pwl::af_const(v);
    const Rat mu = pwl::eval(tw.mu, degrees);
    const Rat nmu = -mu;
    HPoly dom;
    dom.dim = 1;
    dom.inequalities = {{qr({Rat(1)}), Rat(0)}, {qr({Rat(-1)}), nmu}};
    std::vector<Rat> cuts = {Rat(0), mu};
    auto add_chart = [&](const PwlExpr& e) {
        for (const auto& cell : pwl::branches(pwl::substitute(e, repl), dom, {"t"}))
            for (const QVec& v : ratgeom::hrep_to_vrep(cell.guard).vertices)
                cuts.push_back(v[0]);
    };
    for (const auto& [name, e] : tw.positive_ledger) add_chart(e);
    for (const auto& [name, e] : tw.negative_ledger) add_chart(e);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    return cuts;
}

std::map<std::string, Rat> random_degrees(const std::string& label, Rng& rng) {
    if (label == "cxp2") {
        const Rat a = rng.rational_strict(Rat(0), Rat(5), 4);
        const Rat b = rng.rational_strict(Rat(0), Rat(5), 4);
        return vals({{"a", a}, {"b", b}});
    }
    if (label == "ccc") {
        std::vector<Rat> d;
        for (int k = 0; k < 3; ++k) d.push_back(rng.rational_strict(Rat(0), Rat(5), 4));
        std::sort(d.begin(), d.end(), [](const Rat& x, const Rat& y) { return x > y; });
        return vals({{"d1", d[0]}, {"d2", d[1]}, {"d3", d[2]}});
    }
    const Rat s = rng.rational_strict(Rat(0), Rat(1), 24);
    return vals({{"s", s}});
}

std::string format_degrees(const std::map<std::string, Rat>& degrees) {
    std::string out;
    for (const auto& [k, v] : degrees) out += (out.empty() ? "" : " ") + k + "=" + str(v);
    return out;
}

std::string check_nef_across_sweep() {
    Rng rng(140312209);
    for (const auto& label : threefold::tower_labels()) {
        const Tower tw = threefold::tower(label);
        for (int draw = 0; draw < 20; ++draw) {
            auto degrees = random_degrees(label, rng);
            const std::vector<Rat> cuts = sweep_breakpoints(tw, degrees);
            for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
                std::vector<Rat> ts = {cuts[k], cuts[k + 1]};
                const Rat width = cuts[k + 1] - cuts[k];
                for (long j = 1; j <= 10; ++j) {
                    const Rat tj = cuts[k] + width * q(j, 11);
                    ts.push_back(tj);
                }
                for (const Rat& t : ts) {
                    auto v = degrees;
                    v["t"] = t;
                    const SigmaDecomp d = threefold::psigma(tw, v);
                    const auto rep = threefold::verify_nef3(tw, d.positive);
                    REQ(rep.nef, label, " ", format_degrees(degrees), " t=", str(t),
                        ": positive part fails nefness on ", rep.component,
                        " against ", rep.curve);
                }
            }
        }
    }
    return {};
}

std::string check_slice_bridge() {
    Rng rng(66170911);
    for (const auto& label : threefold::tower_labels()) {
        const Tower tw = threefold::tower(label);
        for (int draw = 0; draw < 10; ++draw) {
            const auto degrees = random_degrees(label, rng);
            const Rat mu = pwl::eval(tw.mu, degrees);
            const Rat t = rng.rational_strict(Rat(0), mu, 30);
            const okounkov::NOBody b = okounkov::body(tw, degrees);
            HPoly cut = b.hrep;
            QVec normal = qvec_zero(b.dim);
            normal[0] = Rat(1);
            cut.inequalities.push_back({normal, t});
            const Rat vol6 = 6 * ratgeom::volume(ratgeom::hrep_to_vrep(cut));
            auto v = degrees;
            v["t"] = t;
            const Rat ray = threefold::vol_ray(tw, v);
            REQ(vol6 == ray, label, " ", format_degrees(degrees), " t=", str(t),
                ": 6*truncated body volume ", str(vol6), " != ray volume ", str(ray));
            const auto sl = okounkov::slice_at(tw, v);
            const VPoly section = ratgeom::slice_poly(b.vrep, 0, t);
            REQ(ratgeom::equal_sets(section, sl.polygon), label, " ",
                format_degrees(degrees), " t=", str(t),
                ": body section differs from the computed slice polygon");
        }
    }
    return {};
}

std::string check_glue_slices() {
    const Tower cxp2 = threefold::tower("cxp2");
    const Tower cxjac = threefold::tower("cxjac");
    const okounkov::NOBody g2 = okounkov::glue4d(cxp2);
    const okounkov::NOBody gj = okounkov::glue4d(cxjac);
    Rng rng(88231707);
    for (int i = 0; i < 10; ++i) {
        const Rat s0 = rng.rational_strict(Rat(0), Rat(1), 24);
        const Rat a = 1 - s0;
        const auto product = okounkov::body(cxp2, vals({{"a", a}, {"b", s0}}));
        REQ(ratgeom::equal_sets(ratgeom::slice_poly(g2.vrep, 0, s0), product.vrep),
            "product glue slice at s=", str(s0), " differs from the degree body");
        const auto genus2 = okounkov::body(cxjac, vals({{"s", s0}}));
        REQ(ratgeom::equal_sets(ratgeom::slice_poly(gj.vrep, 0, s0), genus2.vrep),
            "jacobian glue slice at s=", str(s0), " differs from the degree body");
    }
    try {
        okounkov::glue4d(threefold::tower("ccc"));
        return "glue of the three-parameter family unexpectedly succeeded";
    } catch (const std::invalid_argument&) {
    }
    return {};
}

std::string check_seshadri_random() {
    Rng rng(50913119);
    const Tower cxp2 = threefold::tower("cxp2");
    for (int i = 0; i < 12; ++i) {
        const Rat a = rng.rational_strict(Rat(0), Rat(5), 4);
        const Rat b = rng.rational_strict(Rat(0), Rat(5), 4);
        const auto degrees = vals({{"a", a}, {"b", b}});
        const Rat expect = rat_min(2 * a * b, b * b);
        const Rat got = okounkov::seshadri_curve(cxp2, degrees);
        REQ(got == expect, "product a=", str(a), " b=", str(b), ": bound ", str(got),
            " != ", str(expect));
        const auto pc = okounkov::projection_area_check(cxp2, degrees);
        REQ(pc.lhs >= pc.rhs, "product a=", str(a), " b=", str(b),
            ": projected area exceeds the bound");
        if (a >= b)
            REQ(pc.equality && pc.lhs == pc.rhs, "product a=", str(a), " b=", str(b),
                ": expected equality, got lhs=", str(pc.lhs), " rhs=", str(pc.rhs));
    }
    const Tower ccc = threefold::tower("ccc");
    for (int i = 0; i < 12; ++i) {
        const auto degrees = random_degrees("ccc", rng);
        const Rat expect = 2 * degrees.at("d2") * degrees.at("d3");
        const Rat got = okounkov::seshadri_curve(ccc, degrees);
        REQ(got == expect, "triple ", format_degrees(degrees), ": bound ", str(got),
            " != ", str(expect));
        const auto pc = okounkov::projection_area_check(ccc, degrees);
        REQ(pc.equality && pc.lhs == pc.rhs, "triple ", format_degrees(degrees),
            ": expected equality, got lhs=", str(pc.lhs), " rhs=", str(pc.rhs));
    }
    const Tower cxjac = threefold::tower("cxjac");
    for (int i = 0; i < 12; ++i) {
        const Rat s = rng.rational_strict(Rat(0), Rat(1), 24);
        const auto degrees = vals({{"s", s}});
        const Rat lin = q(8, 3) * s * (1 - s);
        const Rat expect = rat_min(2 * s * s, lin);
        const Rat got = okounkov::seshadri_curve(cxjac, degrees);
        REQ(got == expect, "jacobian s=", str(s), ": bound ", str(got), " != ",
            str(expect));
        const auto pc = okounkov::projection_area_check(cxjac, degrees);
        REQ(pc.lhs >= pc.rhs, "jacobian s=", str(s),
            ": projected area exceeds the bound");
    }
    return {};
}

// ---------------------------------------------------------------------------
// paper tier: golden values
// ---------------------------------------------------------------------------

std::string check_golden_product_polygons() {
    const SurfaceModel m = surface::standard_model("two_curves");
    const QVec flag = qv({0, 0, 1});
    const VPoly trap = surface::nobody_surface(m, {qv({3, 2, 0})}, flag, true);
    const VPoly want_trap = hull(2, {qv({0, 0}), qv({2, 2}), qv({3, 2}), qv({5, 0})});
    REQ(ratgeom::equal_sets(trap, want_trap),
        "degrees (3,2): trapezoid {(0,0),(2,2),(3,2),(5,0)} not reproduced");
    const VPoly tri = surface::nobody_surface(m, {qv({1, 1, 0})}, flag, true);
    const VPoly want_tri = hull(2, {qv({0, 0}), qv({1, 1}), qv({2, 0})});
    REQ(ratgeom::equal_sets(tri, want_tri),
        "degrees (1,1): triangle {(0,0),(1,1),(2,0)} not reproduced");
    return {};
}

std::string check_golden_diagonal_polygons() {
    const SurfaceModel m = surface::standard_model("two_curves_diagonal");
    const QVec flag = qv({0, 0, 0, 1});
    const VPoly quad = surface::nobody_surface(m, {qv({2, 2, 1, 4})}, flag, true);
    const VPoly want_quad =
        hull(2, {qv({0, 0}), qv({3, 3}), qv({4, 2}), qv({4, 0})});
    REQ(ratgeom::equal_sets(quad, want_quad),
        "degrees (2,2): quadrilateral {(0,0),(3,3),(4,2),(4,0)} not reproduced");
    const VPoly pent = surface::nobody_surface(m, {qv({3, 2, 1, 5})}, flag, true);
    const VPoly want_pent =
        hull(2, {qv({0, 0}), qv({3, 3}), qv({4, 3}), qv({5, 2}), qv({5, 0})});
    REQ(ratgeom::equal_sets(pent, want_pent),
        "degrees (3,2): pentagon {(0,0),(3,3),(4,3),(5,2),(5,0)} not reproduced");
    return {};
}

std::string check_golden_jacobian_polygon() {
    const SurfaceModel m = surface::standard_model("genus2_jacobian");
    const VPoly tri = surface::nobody_surface(m, {qv({1, 0})}, qv({0, 1}), true);
    const Rat ft = q(4, 3);
    const Rat th = q(3, 2);
    const VPoly want = hull(2, {qv({0, 0}), qr({th, Rat(0)}), qr({ft, ft})});
    REQ(ratgeom::equal_sets(tri, want),
        "theta sweep: triangle {(0,0),(3/2,0),(4/3,4/3)} not reproduced");
    return {};
}

std::string check_golden_symmetric_table() {
    const auto s = surface::p2blow7_symmetric_cones();
    const QMat want = {
        qv({0, 0, 1, 0, 1, 0, 1}),   qv({0, 0, 0, 0, 1, 6, 1}),
        qv({0, 0, 5, 6, 0, 0, 6}),   qv({0, 0, 0, 6, 0, 30, 6}),
        qv({0, 6, 11, 0, 0, 0, 12}), qv({0, 6, 0, 0, 0, 66, 12}),
        qv({6, 0, 16, 0, 0, 0, 18}), qv({6, 0, 0, 0, 0, 96, 18})};
    std::vector<QVec> cols = s.eff_gens;
    cols.push_back(s.h_class);
    for (std::size_t i = 0; i < s.nef_gens.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const Rat entry = pair(s.nef_gens[i], s.pairing, cols[j]);
            REQ(entry == want[i][j], "entry (", i, ",", j, "): ", str(entry), " != ",
                str(want[i][j]));
            REQ(s.intersection_table[i][j] == want[i][j],
                "stored table entry (", i, ",", j, ") drifted");
        }
    REQ(want[7][5] == 96 && want[3][3] == 6, "called-out table entries moved");
    REQ(s.h_class == qv({1, 1, 0, 2, 3}), "polarization class drifted");
    return {};
}

std::string check_golden_ccc_volumes() {
    const Tower tw = threefold::tower("ccc");
    const std::vector<Rat> expect = {Rat(6), Rat(5), Rat(1), Rat(0)};
    for (long t = 0; t <= 3; ++t) {
        const Rat got = threefold::vol_ray(
            tw, vals({{"d1", Rat(1)}, {"d2", Rat(1)}, {"d3", Rat(1)}, {"t", Rat(t)}}));
        REQ(got == expect[static_cast<std::size_t>(t)], "unit degrees t=", t,
            ": volume ", str(got), " != ", str(expect[static_cast<std::size_t>(t)]));
    }
    return {};
}

std::string check_golden_jacobian_volumes() {
    const Tower tw = threefold::tower("cxjac");
    const Rat spot = threefold::vol_ray(tw, vals({{"s", q(1, 2)}, {"t", Rat(0)}}));
    REQ(spot == q(3, 4), "s=1/2 t=0: volume ", str(spot), " != 3/4");
    Rng rng(41220901);
    for (int i = 0; i < 20; ++i) {
        const Rat s = rng.rational_strict(Rat(0), Rat(1), 60);
        const Rat expect = 6 * s * s * (1 - s);
        const Rat got = threefold::vol_ray(tw, vals({{"s", s}, {"t", Rat(0)}}));
        REQ(got == expect, "s=", str(s), " t=0: volume ", str(got), " != ",
            str(expect));
    }
    return {};
}

std::vector<QVec> product_body_verts(const Rat& a, const Rat& b) {
    // valid for a >= b
    const Rat ab = a + b;
    return {qr({Rat(0), Rat(0), Rat(0)}), qr({ab, Rat(0), Rat(0)}),
            qr({a, b, Rat(0)}),           qr({b, b, Rat(0)}),
            qr({b, Rat(0), b}),           qr({ab, Rat(0), b})};
}

std::vector<QVec> product_body_verts_flipped(const Rat& a, const Rat& b) {
    // valid for a <= b
    const Rat ab = a + b;
    const Rat ba = b - a;
    return {qr({Rat(0), Rat(0), Rat(0)}), qr({ab, Rat(0), Rat(0)}),
            qr({b, a, Rat(0)}),           qr({a, a, Rat(0)}),
            qr({b, Rat(0), b}),           qr({ab, Rat(0), b}),
            qr({b, a, ba})};
}

std::string check_golden_product_bodies() {
    const Tower tw = threefold::tower("cxp2");
    struct Case {
        Rat a, b;
    };
    const std::vector<Case> cases = {{Rat(3), Rat(2)}, {Rat(1), Rat(1)}, {Rat(2), Rat(3)}};
    for (const auto& [a, b] : cases) {
        const auto body = okounkov::body(tw, vals({{"a", a}, {"b", b}}));
        const std::vector<QVec> verts =
            a >= b ? product_body_verts(a, b) : product_body_verts_flipped(a, b);
        REQ(ratgeom::same_generators(body.vrep, hull(3, verts)), "degrees (", str(a),
            ",", str(b), "): vertex list not reproduced");
        const Rat want_vol = 3 * a * b * b;
        const Rat got = 6 * ratgeom::volume(body.vrep);
        REQ(got == want_vol, "degrees (", str(a), ",", str(b), "): 6*volume ",
            str(got), " != ", str(want_vol));
    }
    return {};
}

std::vector<QVec> triple_body_verts(const Rat& d1, const Rat& d2, const Rat& d3) {
    // valid for d1 >= d2 >= d3
    const Rat s23 = d2 + d3;
    const Rat s123 = d1 + d2 + d3;
    const Rat s13 = d1 + d3;
    const Rat s12 = d1 + d2;
    const Rat dd = d2 - d3;
    const Rat d33 = 2 * d3;
    const Rat s12m = s12 - d3;
    return {qr({Rat(0), Rat(0), Rat(0)}),
            qr({d3, d3, Rat(0)}),
            qr({s23, Rat(0), s23}),
            qr({s123, Rat(0), Rat(0)}),
            qr({s13, Rat(0), s23}),
            qr({s12, Rat(0), d33}),
            qr({d2, d3, dd}),
            qr({d1, d3, dd}),
            qr({s12m, d3, Rat(0)})};
}

std::string check_golden_triple_bodies() {
    const Tower tw = threefold::tower("ccc");
    const auto big = okounkov::body(
        tw, vals({{"d1", Rat(4)}, {"d2", Rat(3)}, {"d3", Rat(2)}}));
    REQ(ratgeom::same_generators(big.vrep, hull(3, triple_body_verts(Rat(4), Rat(3), Rat(2)))),
        "degrees (4,3,2): nine-point vertex list not reproduced");
    const Rat big_vol = 6 * ratgeom::volume(big.vrep);
    REQ(big_vol == 144, "degrees (4,3,2): 6*volume ", str(big_vol), " != 144");
    const auto unit = okounkov::body(
        tw, vals({{"d1", Rat(1)}, {"d2", Rat(1)}, {"d3", Rat(1)}}));
    const VPoly tetra =
        hull(3, {qv({0, 0, 0}), qv({3, 0, 0}), qv({1, 1, 0}), qv({2, 0, 2})});
    REQ(ratgeom::same_generators(unit.vrep, tetra),
        "unit degrees: tetrahedron {(0,0,0),(3,0,0),(1,1,0),(2,0,2)} not reproduced");
    const Rat unit_vol = 6 * ratgeom::volume(unit.vrep);
    REQ(unit_vol == 6, "unit degrees: 6*volume ", str(unit_vol), " != 6");
    return {};
}

std::string check_golden_genus2_body() {
    const Tower tw = threefold::tower("cxjac");
    const auto body = okounkov::body(tw, vals({{"s", q(1, 2)}}));
    // eight vertices; the (11/16, 1/2, 0) corner lies between two hull edges
    // in height but is extremal in the first two coordinates
    const std::vector<QVec> verts = {
        qv({0, 0, 0}),
        qr({q(1, 2), q(1, 2), Rat(0)}),
        qr({q(2, 3), q(1, 2), q(1, 6)}),
        qr({q(11, 16), q(1, 2), Rat(0)}),
        qr({q(29, 42), q(10, 21), q(3, 14)}),
        qr({q(3, 4), Rat(0), q(3, 4)}),
        qr({q(7, 6), Rat(0), q(3, 4)}),
        qr({q(5, 4), Rat(0), Rat(0)})};
    REQ(ratgeom::same_generators(body.vrep, hull(3, verts)),
        "s=1/2: eight-vertex list not reproduced");
    const Rat vol6 = 6 * ratgeom::volume(body.vrep);
    REQ(vol6 == q(3, 4), "s=1/2: 6*volume ", str(vol6), " != 3/4");
    return {};
}

std::string check_golden_glues() {
    const auto g2 = okounkov::glue4d(threefold::tower("cxp2"));
    REQ(g2.coords == (std::vector<std::string>{"s", "t", "x", "y"}),
        "product glue coordinates drifted");
    const Rat h = q(1, 2);
    const std::vector<QVec> six = {qv({0, 0, 0, 0}), qv({0, 1, 0, 0}),
                                   qr({h, h, h, Rat(0)}), qv({1, 0, 0, 0}),
                                   qv({1, 1, 0, 0}),   qv({1, 1, 0, 1})};
    REQ(ratgeom::same_generators(g2.vrep, hull(4, six)),
        "product glue: six-vertex list not reproduced");
    const Rat v2 = ratgeom::volume(g2.vrep);
    REQ(v2 == q(1, 24), "product glue volume ", str(v2), " != 1/24");

    const auto gj = okounkov::glue4d(threefold::tower("cxjac"));
    const std::vector<QVec> seven = {
        qv({0, 0, 0, 0}),
        qv({0, 1, 0, 0}),
        qr({q(3, 7), q(4, 7), q(4, 7), Rat(0)}),
        qr({q(6, 7), q(9, 7), Rat(0), q(9, 7)}),
        qv({1, 0, 0, 0}),
        qr({Rat(1), q(4, 3), Rat(0), q(4, 3)}),
        qr({Rat(1), q(3, 2), Rat(0), Rat(0)})};
    REQ(ratgeom::same_generators(gj.vrep, hull(4, seven)),
        "jacobian glue: seven-vertex list not reproduced");
    const Rat vj = ratgeom::volume(gj.vrep);
    REQ(vj == q(1, 12), "jacobian glue volume ", str(vj), " != 1/12");
    return {};
}

std::string check_golden_seshadri() {
    const Tower cxp2 = threefold::tower("cxp2");
    const Rat s32 = okounkov::seshadri_curve(cxp2, vals({{"a", Rat(3)}, {"b", Rat(2)}}));
    REQ(s32 == 4, "product (3,2): bound ", str(s32), " != 4");
    const auto pc32 = okounkov::projection_area_check(
        cxp2, vals({{"a", Rat(3)}, {"b", Rat(2)}}));
    REQ(pc32.equality && pc32.lhs == 4 && pc32.rhs == 4,
        "product (3,2): expected equality at 4, got lhs=", str(pc32.lhs), " rhs=",
        str(pc32.rhs));

    const Tower ccc = threefold::tower("ccc");
    const auto big = vals({{"d1", Rat(4)}, {"d2", Rat(3)}, {"d3", Rat(2)}});
    REQ(okounkov::seshadri_curve(ccc, big) == 12, "triple (4,3,2): bound != 12");
    const auto pcb = okounkov::projection_area_check(ccc, big);
    REQ(pcb.equality && pcb.lhs == 12, "triple (4,3,2): expected equality at 12");
    const auto unit = vals({{"d1", Rat(1)}, {"d2", Rat(1)}, {"d3", Rat(1)}});
    const auto pcu = okounkov::projection_area_check(ccc, unit);
    REQ(pcu.equality && pcu.lhs == 2, "unit triple: expected equality at 2");

    const Tower cxjac = threefold::tower("cxjac");
    const auto half = okounkov::projection_area_check(cxjac, vals({{"s", q(1, 2)}}));
    REQ(half.lhs == q(1, 2) && half.rhs == q(59, 126) && !half.equality,
        "jacobian s=1/2: expected strict 1/2 > 59/126, got lhs=", str(half.lhs),
        " rhs=", str(half.rhs));
    const auto sevenths = okounkov::projection_area_check(cxjac, vals({{"s", q(3, 7)}}));
    REQ(sevenths.equality && sevenths.lhs == q(18, 49),
        "jacobian s=3/7: expected equality at 18/49");
    const auto quarter = okounkov::projection_area_check(cxjac, vals({{"s", q(1, 4)}}));
    REQ(quarter.equality && quarter.lhs == q(1, 8),
        "jacobian s=1/4: expected equality at 1/8");
    return {};
}

std::string check_golden_ledger_example() {
    const Tower tw = threefold::tower("cxjac");
    const auto v = vals({{"s", q(1, 2)}, {"t", Rat(0)}});
    const SigmaDecomp d = threefold::psigma(tw, v);
    const std::vector<std::pair<const char*, Rat>> want = {
        {"Jcheck", q(1, 2)}, {"Ycheck", q(1, 8)},  {"Echeck", q(5, 4)},
        {"FRcheck", q(5, 8)}, {"FCcheck", q(3, 4)}, {"Gcheck", q(9, 8)},
        {"Ncheck", q(7, 4)}};
    for (const auto& [name, value] : want) {
        const auto it = d.positive_coeffs.find(name);
        REQ(it != d.positive_coeffs.end(), "coefficient ", name, " missing");
        REQ(it->second == value, "coefficient ", name, ": ", str(it->second),
            " != ", str(value));
    }
    REQ(d.negative_coeffs.empty(), "s=1/2 t=0: unexpected negative part");
    const Rat vol = threefold::vol_ray(tw, v);
    REQ(vol == q(3, 4), "s=1/2 t=0: volume ", str(vol), " != 3/4");
    return {};
}

std::string check_golden_degeneration() {
    const Tower tw = threefold::tower("cxp2");
    const auto body = okounkov::body(tw, vals({{"a", Rat(1)}, {"b", Rat(1)}}));
    REQ(ratgeom::same_generators(body.vrep, hull(3, product_body_verts(Rat(1), Rat(1)))),
        "equal degrees: body differs from the first specialized list");
    REQ(ratgeom::same_generators(body.vrep,
                                 hull(3, product_body_verts_flipped(Rat(1), Rat(1)))),
        "equal degrees: body differs from the second specialized list");
    const std::vector<QVec> five = {qv({0, 0, 0}), qv({2, 0, 0}), qv({1, 1, 0}),
                                    qv({1, 0, 1}), qv({2, 0, 1})};
    REQ(ratgeom::same_generators(body.vrep, hull(3, five)),
        "equal degrees: five-vertex degeneration not reproduced");
    return {};
}

std::string check_golden_stage1_cones() {
    const Tower cxp2 = threefold::tower("cxp2");
    REQ(cxp2.stage1_eff.gens ==
            (std::vector<QVec>{qv({1, 0, -1}), qv({0, 1, -1}), qv({0, 0, 1})}),
        "product family: effective generators drifted");
    REQ(cxp2.stage1_nef &&
            cxp2.stage1_nef->gens ==
                (std::vector<QVec>{qv({1, 0, 0}), qv({0, 1, 0}), qv({1, 1, -1})}),
        "product family: nef generators drifted");
    REQ(cxp2.stage1_mov &&
            cxp2.stage1_mov->gens ==
                (std::vector<QVec>{qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 1, -1})}),
        "product family: movable generators drifted");

    const Tower cxjac = threefold::tower("cxjac");
    REQ(cxjac.stage1_eff.gens ==
            (std::vector<QVec>{qv({1, 0, -1}), qv({0, 4, -6}), qv({0, 0, 1})}),
        "jacobian family: effective generators drifted");
    REQ(cxjac.stage1_nef &&
            cxjac.stage1_nef->gens ==
                (std::vector<QVec>{qv({1, 0, 0}), qv({0, 1, 0}), qv({4, 3, -4})}),
        "jacobian family: nef generators drifted");
    REQ(cxjac.stage1_mov &&
            cxjac.stage1_mov->gens == (std::vector<QVec>{qv({1, 0, 0}), qv({0, 1, 0}),
                                                         qv({0, 3, -4}), qv({1, 6, -9})}),
        "jacobian family: movable generators drifted");

    const Tower ccc = threefold::tower("ccc");
    REQ(!ccc.stage1_nef && !ccc.stage1_mov && ccc.stage1_eff.gens.size() == 4,
        "triple family: unexpected stage-one cone data");

    const auto v = vals({{"s", q(1, 2)}, {"t", Rat(0)}});
    REQ(pwl::eval(cxjac.thresholds.at("nef"), v) == q(1, 2),
        "jacobian family: nef threshold at s=1/2 is not 1/2");
    REQ(pwl::eval(cxjac.thresholds.at("mov"), v) == q(3, 4),
        "jacobian family: movable threshold at s=1/2 is not 3/4");
    REQ(pwl::eval(cxjac.mu, v) == q(5, 4),
        "jacobian family: effective threshold at s=1/2 is not 5/4");
    return {};
}

#undef REQ

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

struct Entry {
    const char* tier;
    const char* name;
    std::string (*fn)();
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> table = {
        {"kernel", "polytope representation round trips", check_polytope_round_trips},
        {"kernel", "cone duality involution", check_cone_duality},
        {"kernel", "volume additivity under hyperplane splits", check_volume_additivity},
        {"kernel", "sweep ledger branch certificates", check_ledger_branch_certificates},
        {"surfaces", "zariski closed form: fiber product", check_zariski_product_form},
        {"surfaces", "zariski closed form: diagonal polarization",
         check_zariski_diagonal_form},
        {"surfaces", "zariski closed form: jacobian theta sweep",
         check_zariski_jacobian_form},
        {"surfaces", "symmetric blowup nefness system", check_symmetric_nef_system},
        {"surfaces", "symmetric blowup dual cones", check_symmetric_dual_cones},
        {"threefolds", "ray volume closed form: product times line",
         check_volume_form_product},
        {"threefolds", "ray volume closed form: triple product",
         check_volume_form_triple},
        {"threefolds", "ray volume closed form: jacobian family",
         check_volume_form_jacobian},
        {"threefolds", "positive parts stay nef across the sweep",
         check_nef_across_sweep},
        {"threefolds", "slice and volume bridge to the body", check_slice_bridge},
        {"threefolds", "glue slices match the degree bodies", check_glue_slices},
        {"threefolds", "seshadri bounds at random parameters", check_seshadri_random},
        {"paper", "product sweep polygons", check_golden_product_polygons},
        {"paper", "diagonal sweep polygons", check_golden_diagonal_polygons},
        {"paper", "jacobian sweep triangle", check_golden_jacobian_polygon},
        {"paper", "symmetric blowup intersection table", check_golden_symmetric_table},
        {"paper", "triple product piecewise volumes", check_golden_ccc_volumes},
        {"paper", "jacobian family volume at the sweep start",
         check_golden_jacobian_volumes},
        {"paper", "product family body vertices", check_golden_product_bodies},
        {"paper", "triple product body vertices", check_golden_triple_bodies},
        {"paper", "jacobian family body vertices", check_golden_genus2_body},
        {"paper", "glued four-dimensional bodies", check_golden_glues},
        {"paper", "seshadri constants and projected areas", check_golden_seshadri},
        {"paper", "decomposition ledger worked example", check_golden_ledger_example},
        {"paper", "equal-degree body degeneration", check_golden_degeneration},
        {"paper", "stage-one cone generators", check_golden_stage1_cones},
    };
    return table;
}

CheckResult run_entry(const Entry& e) {
    CheckResult r;
    r.tier = e.tier;
    r.name = e.name;
    try {
        r.detail = e.fn();
        r.pass = r.detail.empty();
    } catch (const std::exception& ex) {
        r.pass = false;
        r.detail = cat("unexpected exception: ", ex.what());
    }
    return r;
}

}  // namespace

std::vector<std::string> tiers() { return {"kernel", "surfaces", "threefolds", "paper"}; }

std::vector<std::string> check_names(const std::string& tier) {
    std::vector<std::string> names;
    for (const Entry& e : registry())
        if (tier == "all" || tier == e.tier) names.push_back(e.name);
    return names;
}

std::vector<CheckResult> run(const std::string& tier) {
    const auto known = tiers();
    if (tier != "all" && std::find(known.begin(), known.end(), tier) == known.end())
        throw std::invalid_argument("unknown check tier: " + tier);
    std::vector<CheckResult> results;
    for (const Entry& e : registry())
        if (tier == "all" || tier == e.tier) results.push_back(run_entry(e));
    return results;
}

CheckResult run_one(const std::string& name) {
    for (const Entry& e : registry())
        if (name == e.name) return run_entry(e);
    throw std::invalid_argument("unknown check: " + name);
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.pass) return false;
    return true;
}

std::string report(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    std::size_t passed = 0;
    for (const CheckResult& r : results) {
        if (r.pass) {
            ++passed;
            os << "PASS " << r.tier << "/" << r.name << "\n";
        } else {
            os << "FAIL " << r.tier << "/" << r.name << ": " << r.detail << "\n";
        }
    }
    os << passed << " of " << results.size() << " checks passed\n";
    return os.str();
}

}  // namespace okbody::checks
