#include "okbody/okounkov.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace okbody::okounkov {

using pwl::AffineForm;
using pwl::Env;
using pwl::PwlExpr;
using ratgeom::HalfSpace;
using ratgeom::HPoly;
using ratgeom::VPoly;
using threefold::Tower;

namespace {

QVec qv(std::initializer_list<long> xs) {
    QVec v;
    v.reserve(xs.size());
    for (long x : xs) v.push_back(Rat(x));
    return v;
}

/// Converts "form >= 0" into a half-space row over the given coordinate
/// order, evaluating any parameter bound by `env`.
HalfSpace row_from_form(const AffineForm& f, const std::vector<std::string>& coords,
                        const Env& env) {
    QVec normal = qvec_zero(coords.size());
    Rat constant = f.constant;
    for (const auto& [name, coeff] : f.coefficients) {
        const auto bound = env.find(name);
        if (bound != env.end()) {
            constant += coeff * bound->second;
            continue;
        }
        const auto pos = std::find(coords.begin(), coords.end(), name);
        if (pos == coords.end())
            throw std::logic_error("facet row names unbound parameter " + name);
        normal[static_cast<std::size_t>(pos - coords.begin())] += coeff;
    }
    const Rat offset = -constant;
    return {std::move(normal), offset};
}

void check_degrees(const Tower& tw, const std::map<std::string, Rat>& degrees) {
    for (const auto& p : tw.params) {
        if (p == "t") continue;
        const auto it = degrees.find(p);
        if (it == degrees.end())
            throw std::invalid_argument(tw.label + ": missing parameter " + p);
        if (it->second <= 0)
            throw std::domain_error(tw.label + ": parameter " + p + " must be positive");
    }
}

NOBody finish_body(const Tower& tw, std::vector<std::string> coords, VPoly vertices) {
    NOBody out;
    out.dim = coords.size();
    out.coords = std::move(coords);
    if (!vertices.rays.empty())
        throw std::logic_error(tw.label + ": valuation body is unbounded");
    out.vrep = ratgeom::canonical(vertices);
    out.hrep = ratgeom::canonical(ratgeom::vrep_to_hrep(out.vrep));
    return out;
}

NOBody body_from_rows(const Tower& tw, const Env& env) {
    HPoly h;
    h.dim = tw.body_coords.size();
    for (const auto& row : tw.body_rows)
        h.inequalities.push_back(row_from_form(row, tw.body_coords, env));
    return finish_body(tw, tw.body_coords, ratgeom::hrep_to_vrep(h));
}

/// min{x, 0} as an expression node.
PwlExpr min0(const PwlExpr& x) { return PwlExpr::min({x, PwlExpr::constant(Rat(0))}); }

NOBody body_from_ledger(const Tower& tw, const Env& env) {
    std::map<std::string, AffineForm> repl;
    for (const auto& [name, value] : env) repl[name] = pwl::af_const(value);

    // With the degrees fixed, the seven ledger coefficients n_i, m_i, tau are
    // one-dimensional piecewise-linear functions of t.  Chart each of them
    // over [0, mu] and split the axis at the combined breakpoints first: on
    // every piece the coefficients are single affine forms, which keeps the
    // later two-dimensional case split small.  (Feeding the fully nested
    // min-expressions to the case splitter directly is hopeless: candidate
    // regimes multiply per occurrence of a subexpression.)
    const std::array<const char*, 7> keys = {"F1tilde", "F2tilde", "F3tilde",
                                             "Etilde",  "E1",      "E2",     "E3"};
    std::array<std::vector<pwl::BranchCell>, 7> charts;
    const Rat mu = pwl::eval(tw.mu, env);
    HPoly t_domain;
    t_domain.dim = 1;
    t_domain.inequalities = {{qv({1}), Rat(0)}, {qv({-1}), -mu}};
    std::vector<Rat> cuts = {Rat(0), mu};
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const PwlExpr piece = pwl::substitute(tw.positive_ledger.at(keys[i]), repl);
        charts[i] = pwl::branches(piece, t_domain, {"t"});
        for (const auto& cell : charts[i])
            for (const QVec& v : ratgeom::hrep_to_vrep(cell.guard).vertices)
                cuts.push_back(v[0]);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    Rat x_cap(0);
    for (const auto& [name, value] : env) x_cap += value;
    const std::vector<std::string> cell_coords = {"t", "x"};
    const Rat half = Rat(1) / 2;

    std::vector<QVec> cloud;
    Rat total(0);
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const Rat lo = cuts[k];
        const Rat hi = cuts[k + 1];
        const Rat mid = (lo + hi) / 2;
        std::array<AffineForm, 7> coeff;
        for (std::size_t i = 0; i < keys.size(); ++i) {
            const pwl::BranchCell* found = nullptr;
            for (const auto& cell : charts[i])
                if (ratgeom::contains(cell.guard, {mid})) {
                    found = &cell;
                    break;
                }
            if (!found)
                throw std::logic_error(tw.label + ": ledger charts leave a gap in t");
            coeff[i] = found->active_form;
        }
        const AffineForm &n1 = coeff[0], &n2 = coeff[1], &n3 = coeff[2];
        const AffineForm &tau = coeff[3], &m1 = coeff[4], &m2 = coeff[5], &m3 = coeff[6];

        // Width (largest x) and height (largest last coordinate at given x)
        // of the body over this piece, straight from the decomposition
        // ledger: the slice class on the carrier is
        // (sum n - tau) h + sum (m_i - n_j - n_k) e_i, so effective-cone
        // membership bounds x and the carrier Zariski sweep gives the height.
        using pwl::af_add;
        using pwl::af_sub;
        const AffineForm alpha = af_sub(af_add(af_add(n1, n2), n3), tau);
        const AffineForm xvar = pwl::af_var("x");
        auto A = [](const AffineForm& f) { return PwlExpr::affine(f); };
        const PwlExpr width = PwlExpr::min(
            {A(alpha), A(af_sub(af_add(n1, m1), tau)), A(af_sub(af_add(n2, m2), tau)),
             A(af_sub(af_add(n3, m3), tau)),
             A(af_sub(pwl::af_scale(half, af_add(af_add(m1, m2), m3)), tau))});
        auto cut = [&](const AffineForm& mj, const AffineForm& mk, const AffineForm& ni) {
            return min0(A(af_sub(af_sub(af_sub(af_add(mj, mk), ni), tau), xvar)));
        };
        const PwlExpr height = PwlExpr::sum(
            {A(af_sub(alpha, xvar)), cut(m2, m3, n1), cut(m3, m1, n2), cut(m1, m2, n3)});

        HPoly domain;
        domain.dim = 2;
        domain.inequalities = {{qv({1, 0}), lo},
                               {qv({-1, 0}), -hi},
                               {qv({0, 1}), Rat(0)},
                               {qv({0, -1}), -x_cap}};
        for (const auto& hcell : pwl::branches(height, domain, cell_coords)) {
            for (const auto& wcell : pwl::branches(width, hcell.guard, cell_coords)) {
                // Clip the cell to the body's footprint: x below the width
                // and a nonnegative height.
                HPoly clip = wcell.guard;
                clip.inequalities.push_back(row_from_form(
                    pwl::af_sub(wcell.active_form, pwl::af_var("x")), cell_coords, {}));
                clip.inequalities.push_back(
                    row_from_form(hcell.active_form, cell_coords, {}));
                VPoly base;
                try {
                    base = ratgeom::hrep_to_vrep(clip);
                } catch (const std::domain_error&) {
                    continue;  // cell lies fully outside the footprint
                }
                std::vector<QVec> pts;
                for (const QVec& v : base.vertices) {
                    const Rat lift =
                        pwl::af_eval(hcell.active_form, {{"t", v[0]}, {"x", v[1]}});
                    if (lift < 0)
                        throw std::logic_error(tw.label + ": negative prism height");
                    pts.push_back({v[0], v[1], Rat(0)});
                    pts.push_back({v[0], v[1], lift});
                }
                if (pts.empty()) continue;
                total += ratgeom::volume(ratgeom::hull_of_points(3, pts));
                cloud.insert(cloud.end(), pts.begin(), pts.end());
            }
        }
    }
    const VPoly hull = ratgeom::hull_of_points(3, cloud);
    if (ratgeom::volume(hull) != total)
        throw std::logic_error(tw.label +
                               ": prism assembly failed the convexity certificate");
    return finish_body(tw, tw.body_coords, hull);
}

struct Carrier {
    std::string component;
    QVec flag;
};

Carrier carrier_for(const Tower& tw) {
    if (tw.label == "cxp2") return {"Etilde", qv({1, 0})};
    if (tw.label == "ccc") return {"Etilde", qv({1, 0, 0, 0})};
    if (tw.label == "cxjac") return {"Echeck", qv({1, 1, 0, 2, 3})};
    throw std::invalid_argument(tw.label + ": no slice carrier registered");
}

}  // namespace

NOBody body(const Tower& tw, const std::map<std::string, Rat>& degrees) {
    check_degrees(tw, degrees);
    Env env;
    for (const auto& p : tw.params)
        if (p != "t") env[p] = degrees.at(p);
    if (!tw.body_rows.empty()) return body_from_rows(tw, env);
    if (tw.positive_ledger.count("Etilde") && tw.positive_ledger.count("E1"))
        return body_from_ledger(tw, env);
    throw std::logic_error(tw.label + ": no body construction available");
}

NOBody glue4d(const Tower& tw) {
    std::map<std::string, AffineForm> repl;
    if (tw.label == "cxp2") {
        repl["a"] = pwl::af_add(pwl::af_const(Rat(1)), pwl::af_var("s", Rat(-1)));
        repl["b"] = pwl::af_var("s");
    } else if (tw.label == "cxjac") {
        // already parameterized by s
    } else {
        throw std::invalid_argument(tw.label +
                                    ": no one-parameter gluing for this family");
    }
    std::vector<std::string> coords = {"s"};
    coords.insert(coords.end(), tw.body_coords.begin(), tw.body_coords.end());
    HPoly h;
    h.dim = coords.size();
    for (const auto& row : tw.body_rows)
        h.inequalities.push_back(row_from_form(pwl::af_substitute(row, repl), coords, {}));
    h.inequalities.push_back(row_from_form(pwl::af_var("s"), coords, {}));
    h.inequalities.push_back(row_from_form(
        pwl::af_add(pwl::af_const(Rat(1)), pwl::af_var("s", Rat(-1))), coords, {}));
    return finish_body(tw, coords, ratgeom::hrep_to_vrep(h));
}

SlicePolygon slice_at(const Tower& tw, const std::map<std::string, Rat>& values) {
    const auto t_it = values.find("t");
    if (t_it == values.end()) throw std::invalid_argument(tw.label + ": missing parameter t");
    if (t_it->second <= 0)
        throw std::domain_error(tw.label + ": slice requires 0 < t <= mu");
    const threefold::SigmaDecomp sd = threefold::psigma(tw, values);

    const Carrier car = carrier_for(tw);
    const threefold::Component* comp = nullptr;
    for (const auto& c : tw.components)
        if (c.name == car.component) comp = &c;
    if (!comp) throw std::logic_error(tw.label + ": carrier component missing");

    SlicePolygon out;
    out.t = t_it->second;
    out.component = car.component;
    out.model = comp->model;
    out.cls = mat_apply(comp->restriction, sd.positive);
    out.flag = car.flag;
    out.x_max = surface::psef_threshold(out.model, {out.cls}, out.flag);
    const surface::ZariskiDecomp z = surface::zariski(out.model, {out.cls});
    if (pair(z.positive.cls, out.model.pairing, z.positive.cls) <= 0) {
        // The sweep has exhausted the volume: the fiber polygon collapses to
        // a segment (or point) on the boundary of the quadrant.  Positive
        // width and positive height cannot coexist at volume zero, so the
        // hull below is exact.
        const Rat b0 = surface::intersection(out.model, z.positive.cls, out.flag);
        out.polygon = ratgeom::hull_of_points(
            2, {qv({0, 0}), {out.x_max, Rat(0)}, {Rat(0), b0}});
        return out;
    }
    out.polygon = surface::nobody_surface(out.model, {out.cls}, out.flag, false);
    return out;
}

Rat seshadri_curve(const Tower& tw, const std::map<std::string, Rat>& degrees) {
    check_degrees(tw, degrees);
    std::map<std::string, Rat> values = degrees;
    values["t"] = Rat(0);
    return threefold::divisor_degree_bound(tw, values);
}

ProjectionCheck projection_area_check(const Tower& tw,
                                      const std::map<std::string, Rat>& degrees) {
    const NOBody b = body(tw, degrees);
    const VPoly shadow = ratgeom::project(b.vrep, {1, 2});
    ProjectionCheck out;
    const Rat area = ratgeom::volume(shadow);
    out.rhs = 2 * area;
    out.lhs = seshadri_curve(tw, degrees);
    if (out.lhs < out.rhs)
        throw std::logic_error(tw.label +
                               ": projected area exceeds the Seshadri bound");
    out.equality = (out.lhs == out.rhs);
    return out;
}

}  // namespace okbody::okounkov
