#include "okbody/ratgeom.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace okbody::ratgeom {

namespace {

bool lex_less(const QVec& a, const QVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sort_unique(std::vector<QVec>& vs) {
    std::sort(vs.begin(), vs.end(), lex_less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

/// Extends `base` (independent rows) to a full basis of Q^dim with unit
/// vectors; returns only the added vectors.
QMat complement_basis(const QMat& base, std::size_t dim) {
    QMat acc = base;
    QMat added;
    std::size_t r = rank(acc);
    for (std::size_t i = 0; i < dim && r < dim; ++i) {
        QVec e = qvec_zero(dim);
        e[i] = 1;
        acc.push_back(e);
        const std::size_t r2 = rank(acc);
        if (r2 > r) {
            added.push_back(e);
            r = r2;
        } else {
            acc.pop_back();
        }
    }
    return added;
}

/// Double description for a pointed cone { y : rows . y >= 0 } with
/// full-column-rank `rows`. Returns the extreme rays, primitive and sorted.
std::vector<QVec> pointed_dd(std::size_t dim, QMat rows) {
    if (dim == 0) return {};
    for (auto& r : rows) r = primitive(r);
    sort_unique(rows);

    // Initial simplicial cone from a row subset of full rank.
    QMat basis;
    std::vector<char> used(rows.size(), 0);
    for (std::size_t i = 0; i < rows.size() && basis.size() < dim; ++i) {
        basis.push_back(rows[i]);
        if (rank(basis) == basis.size()) {
            used[i] = 1;
        } else {
            basis.pop_back();
        }
    }
    if (basis.size() != dim)
        throw std::logic_error("pointed_dd: input system is not full rank");

    QMat id_cols;
    for (std::size_t j = 0; j < dim; ++j) {
        QVec e = qvec_zero(dim);
        e[j] = 1;
        id_cols.push_back(e);
    }
    const auto inv = solve_many(basis, id_cols);  // columns of basis^{-1}
    std::vector<QVec> rays;
    for (const auto& col : *inv) rays.push_back(primitive(col));

    QMat processed = basis;
    auto adjacent = [&](const QVec& p, const QVec& n) {
        QMat active;
        for (const auto& row : processed)
            if (dot(row, p) == 0 && dot(row, n) == 0) active.push_back(row);
        return rank(std::move(active)) + 2 == dim;
    };

    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (used[i]) continue;
        const QVec& a = rows[i];
        std::vector<QVec> pos, zero, neg;
        for (const auto& r : rays) {
            const int s = sign(dot(a, r));
            (s > 0 ? pos : s == 0 ? zero : neg).push_back(r);
        }
        if (!neg.empty()) {
            std::vector<QVec> next = pos;
            next.insert(next.end(), zero.begin(), zero.end());
            for (const auto& p : pos)
                for (const auto& n : neg)
                    if (adjacent(p, n))
                        next.push_back(primitive(add(scale(-dot(a, n), p), scale(dot(a, p), n))));
            sort_unique(next);
            rays = std::move(next);
        }
        processed.push_back(a);
    }
    sort_unique(rays);
    return rays;
}

QVec apply_basis(const QMat& basis, const QVec& coeffs) {
    QVec v = qvec_zero(basis.empty() ? 0 : basis[0].size());
    for (std::size_t i = 0; i < basis.size(); ++i) v = add(v, scale(coeffs[i], basis[i]));
    return v;
}

bool row_lex_less(const HalfSpace& a, const HalfSpace& b) {
    if (a.normal != b.normal) return lex_less(a.normal, b.normal);
    return a.offset < b.offset;
}

/// Homogenization of an H-polyhedron as rows over (x, w).
QMat homog_rows(const HPoly& h, QMat* eq_rows) {
    QMat rows;
    for (const auto& hs : h.inequalities) {
        QVec r = hs.normal;
        r.push_back(-hs.offset);
        rows.push_back(std::move(r));
    }
    for (const auto& hs : h.equalities) {
        QVec r = hs.normal;
        r.push_back(-hs.offset);
        eq_rows->push_back(std::move(r));
    }
    return rows;
}

}  // namespace

QCone cone_from_inequalities(std::size_t dim, const QMat& rows_in) {
    QCone out;
    out.dim = dim;
    QMat rows;
    for (const auto& r : rows_in)
        if (!is_zero(r)) rows.push_back(r);
    if (rows.empty()) {
        for (std::size_t i = 0; i < dim; ++i) {
            QVec e = qvec_zero(dim);
            e[i] = 1;
            out.lineality.push_back(e);
        }
        return out;
    }
    QMat lin = kernel_basis(rows);
    const QMat w = complement_basis(lin, dim);
    QMat reduced;
    for (const auto& r : rows) {
        QVec rr(w.size());
        for (std::size_t j = 0; j < w.size(); ++j) rr[j] = dot(r, w[j]);
        reduced.push_back(std::move(rr));
    }
    for (const auto& rc : pointed_dd(w.size(), reduced))
        out.rays.push_back(primitive(apply_basis(w, rc)));
    for (const auto& l : lin) out.lineality.push_back(primitive(l, /*fix_sign=*/true));
    sort_unique(out.rays);
    sort_unique(out.lineality);
    return out;
}

ConeHRep cone_to_inequalities(const QCone& c) {
    QMat rows = c.rays;
    for (const auto& l : c.lineality) {
        rows.push_back(l);
        rows.push_back(scale(Rat(-1), l));
    }
    const QCone d = cone_from_inequalities(c.dim, rows);
    return ConeHRep{d.rays, d.lineality};
}

QCone dual_cone(const QCone& c, const QMat& m) {
    QMat span = c.rays;
    span.insert(span.end(), c.lineality.begin(), c.lineality.end());
    QMat pairing = m.empty() ? mat_identity(c.dim) : m;
    if (!m.empty()) {
        // Pairing must be nondegenerate on the span of the cone.
        QMat sp_basis;
        for (const auto& g : span) {
            sp_basis.push_back(g);
            if (rank(sp_basis) < sp_basis.size()) sp_basis.pop_back();
        }
        QMat gram(sp_basis.size(), QVec(sp_basis.size()));
        for (std::size_t i = 0; i < sp_basis.size(); ++i)
            for (std::size_t j = 0; j < sp_basis.size(); ++j)
                gram[i][j] = pair(sp_basis[i], pairing, sp_basis[j]);
        if (!sp_basis.empty() && det(gram) == 0)
            throw std::domain_error("dual_cone: pairing degenerate on the span of the cone");
    }
    QMat rows;
    for (const auto& r : c.rays) rows.push_back(mat_apply(pairing, r));
    for (const auto& l : c.lineality) {
        QVec v = mat_apply(pairing, l);
        rows.push_back(v);
        rows.push_back(scale(Rat(-1), v));
    }
    return cone_from_inequalities(c.dim, rows);
}

VPoly hrep_to_vrep(const HPoly& h) {
    const std::size_t d = h.dim;
    QMat eq_rows;
    QMat ineq_rows = homog_rows(h, &eq_rows);
    {
        QVec w_pos = qvec_zero(d + 1);
        w_pos[d] = 1;
        ineq_rows.push_back(std::move(w_pos));
    }

    // Restrict to the solution space of the equalities, then run DD there.
    QMat sub = eq_rows.empty() ? mat_identity(d + 1) : kernel_basis(eq_rows);
    QMat reduced;
    for (const auto& r : ineq_rows) {
        QVec rr(sub.size());
        for (std::size_t j = 0; j < sub.size(); ++j) rr[j] = dot(r, sub[j]);
        reduced.push_back(std::move(rr));
    }
    const QCone cone = cone_from_inequalities(sub.size(), reduced);

    VPoly out;
    out.dim = d;
    auto classify = [&](const QVec& gen_coeffs, bool line) {
        const QVec g = apply_basis(sub, gen_coeffs);
        const Rat w = g[d];
        QVec x(g.begin(), g.begin() + d);
        if (w == 0) {
            if (is_zero(x)) return;
            out.rays.push_back(primitive(x));
            if (line) out.rays.push_back(primitive(scale(Rat(-1), x)));
        } else {
            out.vertices.push_back(scale(Rat(1) / w, x));
        }
    };
    for (const auto& r : cone.rays) classify(r, false);
    for (const auto& l : cone.lineality) classify(l, true);
    if (out.vertices.empty()) throw std::domain_error("hrep_to_vrep: infeasible system");
    sort_unique(out.vertices);
    sort_unique(out.rays);
    return out;
}

HPoly vrep_to_hrep(const VPoly& v) {
    if (v.empty()) throw std::domain_error("vrep_to_hrep: empty polytope");
    const std::size_t d = v.dim;
    QMat gens;
    for (const auto& p : v.vertices) {
        QVec g = p;
        g.push_back(1);
        gens.push_back(std::move(g));
    }
    for (const auto& r : v.rays) {
        QVec g = r;
        g.push_back(0);
        gens.push_back(std::move(g));
    }
    const QCone dual = cone_from_inequalities(d + 1, gens);

    HPoly out;
    out.dim = d;
    // Affine-hull equalities come from the dual lineality; they also act as a
    // reducer so inequality rows get canonical representatives modulo the
    // hull (and rows trivial on the hull are dropped).
    std::vector<std::pair<std::size_t, QVec>> reducer;
    auto reduce = [&](QVec y) {
        for (const auto& [pc, pr] : reducer)
            if (y[pc] != 0) y = sub(y, scale(y[pc] / pr[pc], pr));
        return y;
    };
    for (const auto& y0 : dual.lineality) {
        const QVec y = reduce(y0);
        QVec n(y.begin(), y.begin() + d);
        if (is_zero(n)) continue;
        for (std::size_t j = 0; j <= d; ++j)
            if (y[j] != 0) {
                reducer.push_back({j, y});
                break;
            }
        const QVec pn = primitive(n, /*fix_sign=*/true);
        Rat s;
        for (std::size_t i = 0; i < d; ++i)
            if (n[i] != 0) {
                s = pn[i] / n[i];
                break;
            }
        out.equalities.push_back({pn, -y[d] * s});
    }
    for (const auto& y0 : dual.rays) {
        const QVec y = reduce(y0);
        QVec n(y.begin(), y.begin() + d);
        if (is_zero(n)) continue;  // trivial modulo the affine hull
        out.inequalities.push_back({primitive(n), Rat(0)});
        const QVec pn = out.inequalities.back().normal;
        // recompute offset against the primitive normal scale
        Rat s;
        for (std::size_t i = 0; i < d; ++i)
            if (n[i] != 0) {
                s = pn[i] / n[i];
                break;
            }
        out.inequalities.back().offset = -y[d] * s;
    }
    std::sort(out.inequalities.begin(), out.inequalities.end(), row_lex_less);
    std::sort(out.equalities.begin(), out.equalities.end(), row_lex_less);
    return out;
}

bool contains(const HPoly& h, const QVec& x) {
    for (const auto& hs : h.inequalities)
        if (dot(hs.normal, x) < hs.offset) return false;
    for (const auto& hs : h.equalities)
        if (dot(hs.normal, x) != hs.offset) return false;
    return true;
}

VPoly project(const VPoly& v, const std::vector<std::size_t>& kept) {
    VPoly out;
    out.dim = kept.size();
    auto pick = [&](const QVec& x) {
        QVec y(kept.size());
        for (std::size_t i = 0; i < kept.size(); ++i) y[i] = x[kept[i]];
        return y;
    };
    for (const auto& p : v.vertices) out.vertices.push_back(pick(p));
    for (const auto& r : v.rays) {
        QVec y = pick(r);
        if (!is_zero(y)) out.rays.push_back(primitive(y));
    }
    sort_unique(out.vertices);
    sort_unique(out.rays);
    if (out.empty()) return out;
    return canonical(out);
}

HPoly project(const HPoly& h, const std::vector<std::size_t>& kept) {
    const std::size_t d = h.dim;
    std::vector<char> keep(d, 0);
    for (auto k : kept) keep[k] = 1;

    struct Row {
        QVec n;
        Rat c;
        std::set<std::size_t> origin;
        bool eq;
    };
    std::vector<Row> rows;
    std::size_t tag = 0;
    for (const auto& hs : h.equalities) rows.push_back({hs.normal, hs.offset, {tag++}, true});
    for (const auto& hs : h.inequalities) rows.push_back({hs.normal, hs.offset, {tag++}, false});

    std::size_t steps = 0;
    for (std::size_t k = 0; k < d; ++k) {
        if (keep[k]) continue;
        ++steps;
        // Prefer an exact pivot on an equality; otherwise Fourier-Motzkin.
        auto piv = std::find_if(rows.begin(), rows.end(),
                                [&](const Row& r) { return r.eq && r.n[k] != 0; });
        if (piv != rows.end()) {
            const Row p = *piv;
            rows.erase(piv);
            for (auto& r : rows) {
                if (r.n[k] == 0) continue;
                const Rat f = r.n[k] / p.n[k];
                r.n = sub(r.n, scale(f, p.n));
                r.c -= f * p.c;
                r.origin.insert(p.origin.begin(), p.origin.end());
            }
            continue;
        }
        std::vector<Row> zero, pos, neg;
        for (auto& r : rows) {
            if (r.eq && r.n[k] != 0)
                throw std::logic_error("project: equality pivot missed");
            (r.n[k] == 0 ? zero : r.n[k] > 0 ? pos : neg).push_back(std::move(r));
        }
        rows = std::move(zero);
        for (const auto& p : pos)
            for (const auto& q : neg) {
                Row nr;
                nr.n = sub(scale(p.n[k], q.n), scale(q.n[k], p.n));
                nr.c = p.n[k] * q.c - q.n[k] * p.c;
                nr.origin = p.origin;
                nr.origin.insert(q.origin.begin(), q.origin.end());
                nr.eq = false;
                // Chernikov bound: combinations of too many originals are redundant.
                if (nr.origin.size() > steps + 1) continue;
                if (is_zero(nr.n) && nr.c <= 0) continue;
                rows.push_back(std::move(nr));
            }
    }

    HPoly out;
    out.dim = kept.size();
    for (const auto& r : rows) {
        QVec n(kept.size());
        for (std::size_t i = 0; i < kept.size(); ++i) n[i] = r.n[kept[i]];
        if (is_zero(n)) {
            if ((r.eq && r.c != 0) || (!r.eq && r.c > 0)) {
                // Infeasible input; encode the empty set explicitly.
                HPoly empty;
                empty.dim = kept.size();
                empty.inequalities.push_back({qvec_zero(kept.size()), Rat(1)});
                return empty;
            }
            continue;
        }
        (r.eq ? out.equalities : out.inequalities).push_back({std::move(n), r.c});
    }
    return canonical(out);
}

VPoly slice_poly(const HPoly& h, std::size_t axis, const Rat& value) {
    HPoly cut;
    cut.dim = h.dim - 1;
    auto reduce_row = [&](const HalfSpace& hs) {
        QVec n;
        n.reserve(h.dim - 1);
        for (std::size_t i = 0; i < h.dim; ++i)
            if (i != axis) n.push_back(hs.normal[i]);
        return HalfSpace{std::move(n), hs.offset - hs.normal[axis] * value};
    };
    for (const auto& hs : h.inequalities) cut.inequalities.push_back(reduce_row(hs));
    for (const auto& hs : h.equalities) cut.equalities.push_back(reduce_row(hs));
    try {
        return hrep_to_vrep(cut);
    } catch (const std::domain_error&) {
        VPoly empty;
        empty.dim = h.dim - 1;
        return empty;
    }
}

VPoly slice_poly(const VPoly& v, std::size_t axis, const Rat& value) {
    if (v.empty()) {
        VPoly empty;
        empty.dim = v.dim - 1;
        return empty;
    }
    return slice_poly(vrep_to_hrep(v), axis, value);
}

namespace {

/// Recursive fan triangulation of a polytope given as its vertex set; `d` is
/// the affine dimension of that set. Returns (d+1)-tuples of points.
std::vector<std::vector<QVec>> triangulate(const std::vector<QVec>& verts, std::size_t d) {
    if (verts.size() == d + 1) return {verts};
    VPoly vp;
    vp.dim = verts.empty() ? 0 : verts[0].size();
    vp.vertices = verts;
    const HPoly h = vrep_to_hrep(vp);
    QVec centroid = qvec_zero(vp.dim);
    for (const auto& p : verts) centroid = add(centroid, p);
    centroid = scale(Rat(1) / Rat(static_cast<long>(verts.size())), centroid);

    std::vector<std::vector<QVec>> out;
    for (const auto& facet : h.inequalities) {
        std::vector<QVec> on_facet;
        for (const auto& p : verts)
            if (dot(facet.normal, p) == facet.offset) on_facet.push_back(p);
        for (auto simplex : triangulate(on_facet, d - 1)) {
            simplex.push_back(centroid);
            out.push_back(std::move(simplex));
        }
    }
    return out;
}

Rat factorial(std::size_t n) {
    Rat f(1);
    for (std::size_t i = 2; i <= n; ++i) f *= Rat(static_cast<long>(i));
    return f;
}

}  // namespace

Rat volume(const VPoly& v) {
    if (!v.rays.empty()) throw std::domain_error("volume: polytope is unbounded");
    if (v.vertices.empty()) return Rat(0);
    const std::size_t d = v.dim;
    std::vector<QVec> verts = v.vertices;
    sort_unique(verts);
    if (affine_rank(verts) < d) return Rat(0);
    const VPoly minimal = canonical(v);

    Rat total(0);
    const Rat dfact = factorial(d);
    for (const auto& s : triangulate(minimal.vertices, d)) {
        QMat m;
        for (std::size_t i = 1; i < s.size(); ++i) m.push_back(sub(s[i], s[0]));
        total += rat_abs(det(std::move(m))) / dfact;
    }
    return total;
}

namespace {

bool vpoly_inside(const VPoly& a, const HPoly& hb) {
    for (const auto& p : a.vertices)
        if (!contains(hb, p)) return false;
    for (const auto& r : a.rays) {
        for (const auto& hs : hb.inequalities)
            if (dot(hs.normal, r) < 0) return false;
        for (const auto& hs : hb.equalities)
            if (dot(hs.normal, r) != 0) return false;
    }
    return true;
}

}  // namespace

bool equal_sets(const VPoly& a, const VPoly& b) {
    if (a.empty() || b.empty()) return a.empty() && b.empty();
    return vpoly_inside(a, vrep_to_hrep(b)) && vpoly_inside(b, vrep_to_hrep(a));
}

bool equal_sets(const VPoly& a, const HPoly& b) {
    if (a.empty()) {
        try {
            hrep_to_vrep(b);
            return false;
        } catch (const std::domain_error&) {
            return true;
        }
    }
    return vpoly_inside(a, b) && vpoly_inside(hrep_to_vrep(b), vrep_to_hrep(a));
}

bool equal_sets(const HPoly& a, const HPoly& b) {
    VPoly va;
    try {
        va = hrep_to_vrep(a);
    } catch (const std::domain_error&) {
        return equal_sets(VPoly{a.dim, {}, {}}, b);
    }
    return equal_sets(va, b);
}

VPoly hull_of_points(std::size_t dim, const std::vector<QVec>& points) {
    VPoly v;
    v.dim = dim;
    v.vertices = points;
    sort_unique(v.vertices);
    return canonical(v);
}

VPoly canonical(const VPoly& v) {
    if (v.empty()) return v;
    return hrep_to_vrep(vrep_to_hrep(v));
}

HPoly canonical(const HPoly& h) {
    try {
        return vrep_to_hrep(hrep_to_vrep(h));
    } catch (const std::domain_error&) {
        HPoly empty;
        empty.dim = h.dim;
        empty.inequalities.push_back({qvec_zero(h.dim), Rat(1)});
        return empty;
    }
}

HPoly intersect(const HPoly& a, const HPoly& b) {
    if (a.dim != b.dim) throw std::invalid_argument("intersect: dimension mismatch");
    HPoly out = a;
    out.inequalities.insert(out.inequalities.end(), b.inequalities.begin(), b.inequalities.end());
    out.equalities.insert(out.equalities.end(), b.equalities.begin(), b.equalities.end());
    return out;
}

Interval coordinate_range(const VPoly& v, std::size_t axis) {
    if (v.empty()) throw std::domain_error("coordinate_range: empty polytope");
    for (const auto& r : v.rays)
        if (r[axis] != 0) throw std::domain_error("coordinate_range: unbounded along axis");
    Interval iv{v.vertices[0][axis], v.vertices[0][axis]};
    for (const auto& p : v.vertices) {
        iv.lo = rat_min(iv.lo, p[axis]);
        iv.hi = rat_max(iv.hi, p[axis]);
    }
    return iv;
}

bool same_generators(const VPoly& a, const VPoly& b) {
    auto normalize = [](const VPoly& v) {
        std::vector<QVec> vs = v.vertices, rs;
        for (const auto& r : v.rays) rs.push_back(primitive(r));
        sort_unique(vs);
        sort_unique(rs);
        return std::pair{vs, rs};
    };
    return normalize(a) == normalize(b);
}

std::string to_string(const QVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << rat_to_string(v[i]);
    os << ")";
    return os.str();
}

}  // namespace okbody::ratgeom
