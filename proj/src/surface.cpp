#include "okbody/surface.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace okbody::surface {

namespace {

constexpr const char* kIncompleteErr =
    "model's negative-curve list is incomplete or class not pseudoeffective";

Rat self_int(const SurfaceModel& m, const QVec& c) { return pair(c, m.pairing, c); }

}  // namespace

void validate(const SurfaceModel& model) {
    const std::size_t n = model.dim();
    if (model.pairing.size() != n)
        throw std::invalid_argument(model.label + ": pairing size mismatch");
    for (const auto& row : model.pairing)
        if (row.size() != n) throw std::invalid_argument(model.label + ": pairing not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (model.pairing[i][j] != model.pairing[j][i])
                throw std::invalid_argument(model.label + ": pairing not symmetric");
    for (const auto& c : model.negative_curves) {
        if (c.cls.size() != n)
            throw std::invalid_argument(model.label + ": curve class length mismatch: " + c.name);
        if (!c.auxiliary && self_int(model, c.cls) >= 0)
            throw std::invalid_argument(model.label +
                                        ": non-negative self-intersection for curve " + c.name);
    }
    for (const auto& gens : {model.mori_generators, model.effective_generators})
        if (gens)
            for (const auto& g : *gens)
                if (g.size() != n)
                    throw std::invalid_argument(model.label + ": generator length mismatch");
}

Rat intersection(const SurfaceModel& model, const QVec& a, const QVec& b) {
    return pair(a, model.pairing, b);
}

const NegativeCurve* find_curve(const SurfaceModel& model, const std::string& name) {
    for (const auto& c : model.negative_curves)
        if (c.name == name) return &c;
    return nullptr;
}

ZariskiDecomp zariski(const SurfaceModel& model, const SurfaceDivisor& d) {
    const auto& curves = model.negative_curves;
    std::vector<std::size_t> support;
    for (std::size_t round = 0; round <= curves.size(); ++round) {
        QMat gram;
        QVec rhs, coeffs;
        for (const std::size_t i : support) {
            QVec row;
            for (const std::size_t j : support)
                row.push_back(intersection(model, curves[i].cls, curves[j].cls));
            gram.push_back(std::move(row));
            rhs.push_back(intersection(model, d.cls, curves[i].cls));
        }
        if (!support.empty()) {
            if (!is_negative_definite(gram)) throw std::domain_error(kIncompleteErr);
            const auto sol = solve(gram, rhs);
            if (!sol) throw std::domain_error(kIncompleteErr);
            coeffs = *sol;
        }
        QVec p = d.cls;
        for (std::size_t k = 0; k < support.size(); ++k)
            p = sub(p, scale(coeffs[k], curves[support[k]].cls));

        bool grew = false;
        for (std::size_t j = 0; j < curves.size(); ++j) {
            if (std::find(support.begin(), support.end(), j) != support.end()) continue;
            if (intersection(model, p, curves[j].cls) < 0) {
                if (self_int(model, curves[j].cls) >= 0) throw std::domain_error(kIncompleteErr);
                support.push_back(j);
                grew = true;
            }
        }
        if (grew) continue;

        ZariskiDecomp out;
        out.positive.cls = std::move(p);
        for (std::size_t k = 0; k < support.size(); ++k) {
            if (coeffs[k] < 0) throw std::domain_error(kIncompleteErr);
            if (coeffs[k] > 0) out.negative_coeffs[curves[support[k]].name] = coeffs[k];
        }
        return out;
    }
    throw std::logic_error("zariski support failed to stabilize");
}

bool is_nef(const SurfaceModel& model, const SurfaceDivisor& d) {
    if (!model.mori_generators)
        throw std::invalid_argument(model.label + ": missing mori_generators");
    for (const auto& g : *model.mori_generators)
        if (intersection(model, d.cls, g) < 0) return false;
    return true;
}

Rat psef_threshold(const SurfaceModel& model, const SurfaceDivisor& d, const QVec& flag) {
    if (!model.effective_generators)
        throw std::invalid_argument(model.label + ": missing effective_generators");
    ratgeom::QCone eff;
    eff.dim = model.dim();
    eff.rays = *model.effective_generators;
    const auto hrep = ratgeom::cone_to_inequalities(eff);
    for (const auto& row : hrep.equality_rows)
        if (dot(row, d.cls) != 0 || dot(row, flag) != 0)
            throw std::domain_error("effective cone degenerate along the sweep ray");
    bool bounded = false;
    Rat best(0);
    for (const auto& row : hrep.inequality_rows) {
        const Rat num = dot(row, d.cls), den = dot(row, flag);
        if (den > 0) {
            const Rat t = num / den;
            if (!bounded || t < best) best = t;
            bounded = true;
        } else if (num < 0) {
            throw std::domain_error("class is not pseudoeffective");
        }
    }
    if (!bounded) throw std::domain_error("pseudoeffective threshold unbounded");
    if (best < 0) throw std::domain_error("class is not pseudoeffective");
    return best;
}

namespace {

/// Decomposition data, affine in the sweep parameter, on a fixed support.
struct AffinePiece {
    Rat t_lo, t_hi;
    Rat beta0, beta1;
    std::vector<std::size_t> support;
};

Rat beta_at(const SurfaceModel& model, const SurfaceDivisor& d, const QVec& flag,
            const Rat& t) {
    SurfaceDivisor lt{sub(d.cls, scale(t, flag))};
    const ZariskiDecomp z = zariski(model, lt);
    return intersection(model, z.positive.cls, flag);
}

}  // namespace

std::vector<SweepPiece> sweep_beta(const SurfaceModel& model, const SurfaceDivisor& d,
                                   const QVec& flag, const Rat& t_hi) {
    const auto& curves = model.negative_curves;

    // Probe a parameter value: determine the support there, solve the
    // orthogonality system with an affine right-hand side, and return the
    // maximal interval around the probe on which that solution stays valid.
    auto probe = [&](const Rat& t) -> AffinePiece {
        SurfaceDivisor lt{sub(d.cls, scale(t, flag))};
        const ZariskiDecomp z = zariski(model, lt);
        std::vector<std::size_t> support;
        for (std::size_t j = 0; j < curves.size(); ++j)
            if (z.negative_coeffs.count(curves[j].name)) support.push_back(j);

        QMat gram;
        QMat rhs_cols(2);
        for (const std::size_t i : support) {
            QVec row;
            for (const std::size_t j : support)
                row.push_back(intersection(model, curves[i].cls, curves[j].cls));
            gram.push_back(std::move(row));
            rhs_cols[0].push_back(intersection(model, d.cls, curves[i].cls));
            rhs_cols[1].push_back(-intersection(model, flag, curves[i].cls));
        }
        QVec xu, xv;
        if (!support.empty()) {
            auto solved = solve_many(gram, rhs_cols);
            if (!solved) throw std::logic_error("sweep: singular support system");
            xu = (*solved)[0];
            xv = (*solved)[1];
        }
        // P(t) = p0 + t*p1 on this support.
        QVec p0 = d.cls, p1 = scale(Rat(-1), flag);
        for (std::size_t k = 0; k < support.size(); ++k) {
            p0 = sub(p0, scale(xu[k], curves[support[k]].cls));
            p1 = sub(p1, scale(xv[k], curves[support[k]].cls));
        }
        // Validity: support coefficients stay >= 0 and P(t) meets every
        // listed curve nonnegatively; each condition is affine in t.
        Rat lo = Rat(0), hi = t_hi;
        auto restrict = [&](const Rat& a, const Rat& b) {  // a + b*t >= 0
            if (b == 0) return;
            const Rat root = -a / b;
            if (b > 0) {
                if (root > lo) lo = root;
            } else {
                if (root < hi) hi = root;
            }
        };
        for (std::size_t k = 0; k < support.size(); ++k) restrict(xu[k], xv[k]);
        for (const auto& c : curves)
            restrict(intersection(model, p0, c.cls), intersection(model, p1, c.cls));
        AffinePiece out;
        out.t_lo = lo;
        out.t_hi = hi;
        out.beta0 = intersection(model, p0, flag);
        out.beta1 = intersection(model, p1, flag);
        out.support = support;
        return out;
    };

    std::vector<AffinePiece> pieces;
    std::deque<std::pair<Rat, Rat>> work{{Rat(0), t_hi}};
    for (int guard = 0; !work.empty(); ++guard) {
        if (guard > 500) throw std::logic_error("sweep failed to terminate");
        auto [a, b] = work.front();
        work.pop_front();
        if (a >= b) continue;
        const Rat mid = (a + b) / 2;
        AffinePiece piece = probe(mid);
        const Rat lo = rat_max(piece.t_lo, a), hi = rat_min(piece.t_hi, b);
        if (lo >= hi) {
            // The probe landed exactly on a breakpoint; split around it.
            work.push_back({a, mid});
            work.push_back({mid, b});
            continue;
        }
        piece.t_lo = lo;
        piece.t_hi = hi;
        pieces.push_back(piece);
        if (a < lo) work.push_back({a, lo});
        if (hi < b) work.push_back({hi, b});
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const AffinePiece& x, const AffinePiece& y) { return x.t_lo < y.t_lo; });

    // Merge neighbours that carry one affine formula; verify the tiling.
    std::vector<SweepPiece> out;
    for (const auto& p : pieces) {
        if (!out.empty() && out.back().beta0 == p.beta0 && out.back().beta1 == p.beta1 &&
            out.back().t_hi == p.t_lo) {
            out.back().t_hi = p.t_hi;
            continue;
        }
        SweepPiece sp;
        sp.t_lo = p.t_lo;
        sp.t_hi = p.t_hi;
        sp.beta0 = p.beta0;
        sp.beta1 = p.beta1;
        for (const std::size_t i : p.support) sp.support.push_back(curves[i].name);
        out.push_back(std::move(sp));
    }
    if (out.empty() || out.front().t_lo != 0 || out.back().t_hi != t_hi)
        throw std::logic_error("sweep did not tile the parameter range");
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
        if (out[i].t_hi != out[i + 1].t_lo)
            throw std::logic_error("sweep left a gap between pieces");

    // Certify every piece by three independent decompositions.
    for (const auto& p : out) {
        const Rat t_mid = (p.t_lo + p.t_hi) / 2;
        for (const Rat& t : {p.t_lo, t_mid, p.t_hi}) {
            if (beta_at(model, d, flag, t) != p.beta0 + p.beta1 * t)
                throw std::logic_error("sweep certification failed");
        }
    }
    return out;
}

ratgeom::VPoly nobody_surface(const SurfaceModel& model, const SurfaceDivisor& d,
                              const QVec& flag, bool infinitesimal,
                              const std::optional<Rat>& t_max) {
    if (infinitesimal) {
        if (self_int(model, flag) != -1)
            throw std::invalid_argument("infinitesimal flag must have self-intersection -1");
    } else if (model.mori_generators && !is_nef(model, {flag})) {
        throw std::invalid_argument("flag curve must be nef");
    }
    {
        const ZariskiDecomp z = zariski(model, d);
        if (pair(z.positive.cls, model.pairing, z.positive.cls) <= 0)
            throw std::domain_error("divisor is not big");
    }
    Rat t_top;
    if (model.effective_generators) {
        t_top = psef_threshold(model, d, flag);
        if (t_max && *t_max < t_top) t_top = *t_max;
    } else if (t_max) {
        t_top = *t_max;
    } else {
        throw std::invalid_argument(model.label +
                                    ": missing effective_generators and no t range given");
    }
    const auto pieces = sweep_beta(model, d, flag, t_top);
    std::vector<QVec> pts{{Rat(0), Rat(0)}, {t_top, Rat(0)}};
    for (const auto& p : pieces) {
        pts.push_back({p.t_lo, p.beta0 + p.beta1 * p.t_lo});
        pts.push_back({p.t_hi, p.beta0 + p.beta1 * p.t_hi});
    }
    return ratgeom::hull_of_points(2, pts);
}

SurfaceModel blowup_point(const SurfaceModel& model,
                          const std::map<std::string, long>& multiplicities,
                          const std::string& new_name) {
    for (const auto& [name, mult] : multiplicities) {
        if (!find_curve(model, name))
            throw std::invalid_argument("blowup_point: unknown curve " + name);
        if (mult < 0) throw std::invalid_argument("blowup_point: negative multiplicity");
    }
    SurfaceModel out;
    out.label = model.label;
    out.basis_names = model.basis_names;
    out.basis_names.push_back(new_name);
    const std::size_t n = model.dim();
    out.pairing = QMat(n + 1, QVec(n + 1, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.pairing[i][j] = model.pairing[i][j];
    out.pairing[n][n] = Rat(-1);

    for (const auto& c : model.negative_curves) {
        NegativeCurve nc;
        nc.name = c.name;
        nc.cls = c.cls;
        const auto it = multiplicities.find(c.name);
        nc.cls.push_back(it == multiplicities.end() ? Rat(0) : Rat(-it->second));
        nc.auxiliary = pair(nc.cls, out.pairing, nc.cls) >= 0;
        out.negative_curves.push_back(std::move(nc));
    }
    NegativeCurve exc;
    exc.name = new_name;
    exc.cls = qvec_zero(n + 1);
    exc.cls[n] = Rat(1);
    out.negative_curves.push_back(std::move(exc));
    return out;
}

SurfaceModel ruled_surface(const std::string& genus_label, long d1, long d2) {
    if (d1 < d2) throw std::invalid_argument("ruled_surface requires d1 >= d2");
    SurfaceModel m;
    m.label = "ruled(" + genus_label + "," + std::to_string(d1) + "," + std::to_string(d2) + ")";
    m.basis_names = {"xi", "f"};
    m.pairing = {{Rat(d1 + d2), Rat(1)}, {Rat(1), Rat(0)}};
    NegativeCurve neg;  // the section of minimal self-intersection
    neg.name = "xi-" + std::to_string(d1) + "f";
    neg.cls = {Rat(1), Rat(-d1)};
    neg.auxiliary = d1 == d2;  // self-intersection d2 - d1
    NegativeCurve fib;
    fib.name = "f";
    fib.cls = {Rat(0), Rat(1)};
    fib.auxiliary = true;
    m.negative_curves = {neg, fib};
    m.effective_generators = {{Rat(1), Rat(-d1)}, {Rat(0), Rat(1)}};
    m.mori_generators = {{Rat(1), Rat(-d2)}, {Rat(0), Rat(1)}};
    return m;
}

SymmetricConeData p2blow7_symmetric_cones() {
    // Plane with the tracked line classes: one six-fold line L and the six
    // lines L_i joining the i-th point to the seventh.
    SurfaceModel m;
    m.label = "p2blow7";
    m.basis_names = {"h"};
    m.pairing = {{Rat(1)}};
    auto aux_line = [&](const std::string& name) {
        NegativeCurve c;
        c.name = name;
        c.cls = {Rat(1)};
        c.auxiliary = true;
        m.negative_curves.push_back(std::move(c));
    };
    aux_line("L");
    for (int i = 1; i <= 6; ++i) aux_line("L" + std::to_string(i));

    // First stage: seven points; L passes through the first six, each L_i
    // through the i-th and the seventh.
    for (int i = 1; i <= 6; ++i)
        m = blowup_point(m, {{"L", 1}, {"L" + std::to_string(i), 1}}, "e" + std::to_string(i));
    {
        std::map<std::string, long> mult;
        for (int i = 1; i <= 6; ++i) mult["L" + std::to_string(i)] = 1;
        m = blowup_point(m, mult, "e7");
    }
    // Second stage: on each of the first six exceptional lines, the point
    // where L crosses it.
    for (int i = 1; i <= 6; ++i)
        m = blowup_point(m, {{"L", 1}, {"e" + std::to_string(i), 1}}, "g" + std::to_string(i));
    // Third stage: on each new exceptional line, the point where the strict
    // transform of the older one crosses it.
    for (int i = 1; i <= 6; ++i)
        m = blowup_point(m, {{"g" + std::to_string(i), 1}, {"e" + std::to_string(i), 1}},
                         "n" + std::to_string(i));

    const std::size_t n20 = m.dim();
    auto cls = [&](const std::string& name) {
        const NegativeCurve* c = find_curve(m, name);
        if (!c) throw std::logic_error("p2blow7: missing curve " + name);
        return c->cls;
    };
    // Orbit sums spanning the symmetric subspace, in the order (L, E, E7, G, N).
    std::vector<QVec> orbit(5, qvec_zero(n20));
    orbit[0] = cls("L");
    orbit[2] = cls("e7");
    for (int i = 1; i <= 6; ++i) {
        orbit[1] = add(orbit[1], cls("e" + std::to_string(i)));
        orbit[3] = add(orbit[3], cls("g" + std::to_string(i)));
        orbit[4] = add(orbit[4], cls("n" + std::to_string(i)));
    }

    SymmetricConeData out;
    out.pairing = QMat(5, QVec(5));
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            out.pairing[i][j] = intersection(m, orbit[i], orbit[j]);

    // Nefness of a symmetric class against one representative per curve
    // orbit, expressed over the symmetric coordinates.
    out.nef_ineqs.dim = 5;
    for (const std::string& probe_name : {"L", "L1", "e1", "e7", "g1", "n1"}) {
        const QVec probe = cls(probe_name);
        QVec row(5);
        for (std::size_t j = 0; j < 5; ++j) row[j] = intersection(m, orbit[j], probe);
        out.nef_ineqs.inequalities.push_back({primitive(row), Rat(0)});
    }
    QMat rows;
    for (const auto& hs : out.nef_ineqs.inequalities) rows.push_back(hs.normal);
    out.nef_gens = ratgeom::cone_from_inequalities(5, rows).rays;

    ratgeom::QCone nef;
    nef.dim = 5;
    nef.rays = out.nef_gens;
    out.eff_gens = ratgeom::dual_cone(nef, out.pairing).rays;

    out.h_class = {Rat(1), Rat(1), Rat(0), Rat(2), Rat(3)};

    // Pair every nef generator against the effective generators and H.
    for (const auto& g : out.nef_gens) {
        QVec row;
        for (const auto& e : out.eff_gens) row.push_back(pair(g, out.pairing, e));
        row.push_back(pair(g, out.pairing, out.h_class));
        out.intersection_table.push_back(std::move(row));
    }

    // Names for the effective generators, recognized by coordinates.
    for (const auto& e : out.eff_gens) {
        std::string name = "?";
        if (e == QVec{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)}) name = "L";
        else if (e == QVec{Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)}) name = "E";
        else if (e == QVec{Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)}) name = "E7";
        else if (e == QVec{Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)}) name = "G";
        else if (e == QVec{Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}) name = "N";
        else if (e == QVec{Rat(6), Rat(5), Rat(-6), Rat(11), Rat(16)}) name = "L7";
        out.eff_names.push_back(name);
    }

    // The symmetric five-parameter model, usable by the generic machinery.
    SurfaceModel sym;
    sym.label = "p2blow7_symmetric";
    sym.basis_names = {"L", "E", "E7", "G", "N"};
    sym.pairing = out.pairing;
    for (std::size_t i = 0; i < out.eff_gens.size(); ++i) {
        NegativeCurve c;
        c.name = out.eff_names[i];
        c.cls = out.eff_gens[i];
        c.auxiliary = pair(c.cls, sym.pairing, c.cls) >= 0;
        sym.negative_curves.push_back(std::move(c));
    }
    sym.mori_generators = out.eff_gens;
    sym.effective_generators = out.eff_gens;
    out.model = std::move(sym);
    return out;
}

namespace {

QVec qv(std::initializer_list<long> xs) {
    QVec v;
    v.reserve(xs.size());
    for (long x : xs) v.push_back(Rat(x));
    return v;
}

SurfaceModel model_two_curves() {
    SurfaceModel m;
    m.label = "two_curves";
    m.basis_names = {"f1", "f2", "E"};
    m.pairing = {qv({0, 1, 0}), qv({1, 0, 0}), qv({0, 0, -1})};
    m.negative_curves = {{"fbar1", qv({1, 0, -1}), false},
                         {"fbar2", qv({0, 1, -1}), false},
                         {"E", qv({0, 0, 1}), false}};
    m.mori_generators = {qv({1, 0, -1}), qv({0, 1, -1}), qv({0, 0, 1})};
    m.effective_generators = m.mori_generators;
    return m;
}

SurfaceModel model_two_curves_diagonal() {
    SurfaceModel m;
    m.label = "two_curves_diagonal";
    m.basis_names = {"fbar1", "fbar2", "diag", "E"};
    m.pairing = {qv({-1, 0, 1, 1}), qv({0, -1, 1, 1}), qv({1, 1, -2, 0}),
                 qv({1, 1, 0, -1})};
    m.negative_curves = {{"fbar1", qv({1, 0, 0, 0}), false},
                         {"fbar2", qv({0, 1, 0, 0}), false},
                         {"diag", qv({0, 0, 1, 0}), false},
                         {"E", qv({0, 0, 0, 1}), false}};
    m.mori_generators = {qv({1, 0, 0, 0}), qv({0, 1, 0, 0}), qv({0, 0, 1, 0}),
                         qv({0, 0, 0, 1})};
    m.effective_generators = m.mori_generators;
    return m;
}

SurfaceModel model_genus2_jacobian() {
    SurfaceModel m;
    m.label = "genus2_jacobian";
    m.basis_names = {"theta", "E"};
    m.pairing = {qv({2, 0}), qv({0, -1})};
    m.negative_curves = {{"Rbar", qv({4, -6}), false}, {"E", qv({0, 1}), false}};
    m.mori_generators = {qv({4, -6}), qv({0, 1})};
    m.effective_generators = m.mori_generators;
    return m;
}

SurfaceModel model_p2_blow_1() {
    SurfaceModel m;
    m.label = "p2_blow_1";
    m.basis_names = {"h", "e"};
    m.pairing = {qv({1, 0}), qv({0, -1})};
    m.negative_curves = {{"e", qv({0, 1}), false}, {"line", qv({1, -1}), true}};
    m.mori_generators = {qv({0, 1}), qv({1, -1})};
    m.effective_generators = m.mori_generators;
    return m;
}

SurfaceModel model_p2_blow_3_cremona() {
    SurfaceModel m;
    m.label = "p2_blow_3_cremona";
    m.basis_names = {"h", "e1", "e2", "e3"};
    m.pairing = {qv({1, 0, 0, 0}), qv({0, -1, 0, 0}), qv({0, 0, -1, 0}),
                 qv({0, 0, 0, -1})};
    m.negative_curves = {{"e1", qv({0, 1, 0, 0}), false},
                         {"e2", qv({0, 0, 1, 0}), false},
                         {"e3", qv({0, 0, 0, 1}), false},
                         {"l12", qv({1, -1, -1, 0}), false},
                         {"l13", qv({1, -1, 0, -1}), false},
                         {"l23", qv({1, 0, -1, -1}), false}};
    m.mori_generators = std::vector<QVec>{};
    for (const auto& c : m.negative_curves) m.mori_generators->push_back(c.cls);
    m.effective_generators = m.mori_generators;
    return m;
}

/// Elliptic-involution quotient target of the genus-two theta family:
/// a ruled surface over the quotient curve blown up in six points, carrying
/// one (-6)-section and six disjoint (-1)-fiber components.
SurfaceModel model_z() {
    SurfaceModel m;
    m.label = "z_model";
    m.basis_names = {"fC", "fD", "E1", "E2", "E3", "E4", "E5", "E6"};
    const std::size_t n = 8;
    m.pairing = QMat(n, qvec_zero(n));
    m.pairing[0][1] = m.pairing[1][0] = Rat(1);
    for (std::size_t i = 2; i < n; ++i) m.pairing[i][i] = Rat(-1);
    QVec dc = qv({1, 0, -1, -1, -1, -1, -1, -1});
    m.negative_curves.push_back({"Dc", dc, false});
    for (int i = 1; i <= 6; ++i) {
        QVec fd = qvec_zero(n);
        fd[1] = Rat(1);
        fd[1 + i] = Rat(-1);
        m.negative_curves.push_back({"fD" + std::to_string(i), fd, false});
        QVec e = qvec_zero(n);
        e[1 + i] = Rat(1);
        m.negative_curves.push_back({"E" + std::to_string(i), e, false});
    }
    m.negative_curves.push_back({"fC", qv({1, 0, 0, 0, 0, 0, 0, 0}), true});
    m.negative_curves.push_back({"fD", qv({0, 1, 0, 0, 0, 0, 0, 0}), true});
    m.mori_generators = std::vector<QVec>{};
    for (std::size_t i = 0; i + 2 < m.negative_curves.size(); ++i)
        m.mori_generators->push_back(m.negative_curves[i].cls);
    m.effective_generators = m.mori_generators;
    return m;
}

}  // namespace

SurfaceModel standard_model(const std::string& label) {
    if (label == "two_curves") return model_two_curves();
    if (label == "two_curves_diagonal") return model_two_curves_diagonal();
    if (label == "genus2_jacobian") return model_genus2_jacobian();
    if (label == "p2_blow_1") return model_p2_blow_1();
    if (label == "p2_blow_3_cremona") return model_p2_blow_3_cremona();
    if (label == "z_model") return model_z();
    if (label == "p2blow7_symmetric") return p2blow7_symmetric_cones().model;
    if (label.rfind("ruled(", 0) == 0 && label.back() == ')') {
        const std::string inner = label.substr(6, label.size() - 7);
        const auto c1 = inner.find(',');
        const auto c2 = inner.find(',', c1 + 1);
        if (c1 != std::string::npos && c2 != std::string::npos) {
            const std::string g = inner.substr(0, c1);
            const long d1 = std::stol(inner.substr(c1 + 1, c2 - c1 - 1));
            const long d2 = std::stol(inner.substr(c2 + 1));
            return ruled_surface(g, d1, d2);
        }
    }
    throw std::invalid_argument("unknown surface model: " + label);
}

std::vector<std::string> standard_model_labels() {
    return {"two_curves",       "two_curves_diagonal", "genus2_jacobian",
            "p2_blow_1",        "p2_blow_3_cremona",   "z_model",
            "p2blow7_symmetric"};
}

}  // namespace okbody::surface
