#include "okbody/pwl.hpp"

#include <algorithm>
#include <stdexcept>

namespace okbody::pwl {

AffineForm af_normalized(AffineForm f) {
    for (auto it = f.coefficients.begin(); it != f.coefficients.end();)
        it = (it->second == 0) ? f.coefficients.erase(it) : std::next(it);
    return f;
}

AffineForm af_const(const Rat& c) { return AffineForm{{}, c}; }

AffineForm af_var(const std::string& name, const Rat& coeff) {
    AffineForm f;
    if (coeff != 0) f.coefficients[name] = coeff;
    return f;
}

AffineForm af_add(const AffineForm& a, const AffineForm& b) {
    AffineForm out = a;
    for (const auto& [k, v] : b.coefficients) out.coefficients[k] += v;
    out.constant += b.constant;
    return af_normalized(std::move(out));
}

AffineForm af_sub(const AffineForm& a, const AffineForm& b) {
    return af_add(a, af_scale(Rat(-1), b));
}

AffineForm af_scale(const Rat& c, const AffineForm& f) {
    AffineForm out;
    if (c == 0) return out;
    for (const auto& [k, v] : f.coefficients) out.coefficients[k] = c * v;
    out.constant = c * f.constant;
    return out;
}

bool af_equal(const AffineForm& a, const AffineForm& b) {
    const AffineForm na = af_normalized(a), nb = af_normalized(b);
    return na.coefficients == nb.coefficients && na.constant == nb.constant;
}

Rat af_eval(const AffineForm& f, const Env& env) {
    Rat acc = f.constant;
    for (const auto& [k, v] : f.coefficients) {
        const auto it = env.find(k);
        if (it == env.end()) throw std::invalid_argument("missing parameter: " + k);
        acc += v * it->second;
    }
    return acc;
}

AffineForm af_substitute(const AffineForm& f, const std::map<std::string, AffineForm>& repl) {
    AffineForm out = af_const(f.constant);
    for (const auto& [k, v] : f.coefficients) {
        const auto it = repl.find(k);
        out = af_add(out, it == repl.end() ? af_var(k, v) : af_scale(v, it->second));
    }
    return out;
}

PwlExpr PwlExpr::affine(AffineForm f) {
    PwlExpr e;
    e.op = Op::Affine;
    e.form = af_normalized(std::move(f));
    return e;
}

PwlExpr PwlExpr::constant(const Rat& c) { return affine(af_const(c)); }

PwlExpr PwlExpr::variable(const std::string& name) { return affine(af_var(name)); }

namespace {

PwlExpr node(PwlExpr::Op op, std::vector<PwlExpr> xs) {
    if (xs.empty()) throw std::invalid_argument("pwl node requires children");
    PwlExpr e;
    e.op = op;
    e.children = std::move(xs);
    return e;
}

}  // namespace

PwlExpr PwlExpr::min(std::vector<PwlExpr> xs) { return node(Op::Min, std::move(xs)); }
PwlExpr PwlExpr::max(std::vector<PwlExpr> xs) { return node(Op::Max, std::move(xs)); }

PwlExpr PwlExpr::pos(PwlExpr x) {
    PwlExpr e;
    e.op = Op::Pos;
    e.children.push_back(std::move(x));
    return e;
}

PwlExpr PwlExpr::sum(std::vector<PwlExpr> xs) { return node(Op::Sum, std::move(xs)); }

PwlExpr PwlExpr::scale(const Rat& c, PwlExpr x) {
    PwlExpr e;
    e.op = Op::Scale;
    e.factor = c;
    e.children.push_back(std::move(x));
    return e;
}

Rat eval(const PwlExpr& expr, const Env& env) {
    switch (expr.op) {
        case PwlExpr::Op::Affine:
            return af_eval(expr.form, env);
        case PwlExpr::Op::Min: {
            Rat best = eval(expr.children[0], env);
            for (std::size_t i = 1; i < expr.children.size(); ++i)
                best = rat_min(best, eval(expr.children[i], env));
            return best;
        }
        case PwlExpr::Op::Max: {
            Rat best = eval(expr.children[0], env);
            for (std::size_t i = 1; i < expr.children.size(); ++i)
                best = rat_max(best, eval(expr.children[i], env));
            return best;
        }
        case PwlExpr::Op::Pos:
            return pos_part(eval(expr.children[0], env));
        case PwlExpr::Op::Sum: {
            Rat acc(0);
            for (const auto& c : expr.children) acc += eval(c, env);
            return acc;
        }
        case PwlExpr::Op::Scale:
            return expr.factor * eval(expr.children[0], env);
    }
    throw std::logic_error("unreachable pwl op");
}

PwlExpr substitute(const PwlExpr& expr, const std::map<std::string, AffineForm>& repl) {
    if (expr.op == PwlExpr::Op::Affine) return PwlExpr::affine(af_substitute(expr.form, repl));
    PwlExpr out = expr;
    for (auto& child : out.children) child = substitute(child, repl);
    return out;
}

std::set<std::string> parameters(const PwlExpr& expr) {
    std::set<std::string> out;
    if (expr.op == PwlExpr::Op::Affine) {
        for (const auto& [k, v] : expr.form.coefficients) out.insert(k);
    } else {
        for (const auto& c : expr.children) out.merge(parameters(c));
    }
    return out;
}

namespace {

using ratgeom::HalfSpace;
using ratgeom::HPoly;
using ratgeom::VPoly;

/// A candidate affine regime: the form plus the conditions (each an affine
/// form required >= 0) under which it is the value of the expression.
struct Cand {
    AffineForm form;
    std::vector<AffineForm> guards;
};

std::vector<std::vector<Cand>> cartesian(const std::vector<std::vector<Cand>>& lists) {
    std::vector<std::vector<Cand>> acc{{}};
    for (const auto& list : lists) {
        std::vector<std::vector<Cand>> next;
        for (const auto& prefix : acc)
            for (const auto& item : list) {
                auto row = prefix;
                row.push_back(item);
                next.push_back(std::move(row));
            }
        acc = std::move(next);
    }
    return acc;
}

std::vector<Cand> collect(const PwlExpr& expr) {
    switch (expr.op) {
        case PwlExpr::Op::Affine:
            return {{expr.form, {}}};
        case PwlExpr::Op::Scale: {
            auto cands = collect(expr.children[0]);
            for (auto& c : cands) c.form = af_scale(expr.factor, c.form);
            return cands;
        }
        case PwlExpr::Op::Sum: {
            std::vector<std::vector<Cand>> lists;
            for (const auto& c : expr.children) lists.push_back(collect(c));
            std::vector<Cand> out;
            for (const auto& combo : cartesian(lists)) {
                Cand acc{af_const(Rat(0)), {}};
                for (const auto& c : combo) {
                    acc.form = af_add(acc.form, c.form);
                    acc.guards.insert(acc.guards.end(), c.guards.begin(), c.guards.end());
                }
                out.push_back(std::move(acc));
            }
            return out;
        }
        case PwlExpr::Op::Pos:
        case PwlExpr::Op::Min:
        case PwlExpr::Op::Max: {
            const bool is_min = expr.op == PwlExpr::Op::Min;
            std::vector<std::vector<Cand>> lists;
            for (const auto& c : expr.children) lists.push_back(collect(c));
            if (expr.op == PwlExpr::Op::Pos) lists.push_back({{af_const(Rat(0)), {}}});
            std::vector<Cand> out;
            for (const auto& combo : cartesian(lists)) {
                for (std::size_t k = 0; k < combo.size(); ++k) {
                    Cand c{combo[k].form, {}};
                    for (const auto& item : combo)
                        c.guards.insert(c.guards.end(), item.guards.begin(),
                                        item.guards.end());
                    for (std::size_t i = 0; i < combo.size(); ++i) {
                        if (i == k) continue;
                        c.guards.push_back(is_min ? af_sub(combo[i].form, combo[k].form)
                                                  : af_sub(combo[k].form, combo[i].form));
                    }
                    out.push_back(std::move(c));
                }
            }
            return out;
        }
    }
    throw std::logic_error("unreachable pwl op");
}

QVec form_normal(const AffineForm& f, const std::vector<std::string>& params) {
    QVec n = qvec_zero(params.size());
    for (const auto& [k, v] : f.coefficients) {
        const auto it = std::find(params.begin(), params.end(), k);
        if (it == params.end())
            throw std::invalid_argument("branch parameter not in order list: " + k);
        n[static_cast<std::size_t>(it - params.begin())] = v;
    }
    return n;
}

}  // namespace

std::vector<BranchCell> branches(const PwlExpr& expr, const HPoly& domain,
                                 const std::vector<std::string>& params) {
    if (domain.dim != params.size())
        throw std::invalid_argument("domain dimension must match parameter count");
    struct Entry {
        std::vector<QVec> key_vertices;
        AffineForm form;
        HPoly guard;
    };
    std::vector<Entry> cells;
    for (const auto& cand : collect(expr)) {
        HPoly g = domain;
        for (const auto& gf : cand.guards)
            g.inequalities.push_back({form_normal(gf, params), -gf.constant});
        VPoly v;
        try {
            v = ratgeom::hrep_to_vrep(g);
        } catch (const std::domain_error&) {
            continue;  // empty regime
        }
        if (!v.rays.empty())
            throw std::invalid_argument("branches: domain must be bounded");
        if (affine_rank(v.vertices) < params.size()) continue;  // degenerate regime

        std::vector<QVec> key = v.vertices;  // already sorted canonically
        const AffineForm nf = af_normalized(cand.form);
        const bool dup = std::any_of(cells.begin(), cells.end(), [&](const Entry& e) {
            return e.key_vertices == key && af_equal(e.form, nf);
        });
        if (dup) continue;

        // Certify: the expression equals the active form at the centroid and
        // at every vertex of the cell.
        QVec centroid = qvec_zero(params.size());
        for (const auto& p : v.vertices) centroid = add(centroid, p);
        centroid = scale(Rat(1) / Rat(static_cast<long>(v.vertices.size())), centroid);
        std::vector<QVec> probes = v.vertices;
        probes.push_back(centroid);
        for (const auto& p : probes) {
            Env env;
            for (std::size_t i = 0; i < params.size(); ++i) env[params[i]] = p[i];
            if (eval(expr, env) != af_eval(nf, env))
                throw std::logic_error("branch certification failed");
        }
        cells.push_back({std::move(key), nf, ratgeom::vrep_to_hrep(v)});
    }
    std::sort(cells.begin(), cells.end(), [](const Entry& a, const Entry& b) {
        return a.key_vertices < b.key_vertices;
    });
    std::vector<BranchCell> out;
    for (auto& e : cells) out.push_back({std::move(e.form), std::move(e.guard)});
    return out;
}

}  // namespace okbody::pwl
