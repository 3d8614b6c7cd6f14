#pragma once

#include "okbody/ratgeom.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace okbody::pwl {

/// Linear-plus-constant form over named parameters. Zero coefficients are
/// never stored, so normalized forms compare structurally.
struct AffineForm {
    std::map<std::string, Rat> coefficients;
    Rat constant{0};
};

using Env = std::map<std::string, Rat>;

AffineForm af_normalized(AffineForm f);
AffineForm af_const(const Rat& c);
AffineForm af_var(const std::string& name, const Rat& coeff = Rat(1));
AffineForm af_add(const AffineForm& a, const AffineForm& b);
AffineForm af_sub(const AffineForm& a, const AffineForm& b);
AffineForm af_scale(const Rat& c, const AffineForm& f);
bool af_equal(const AffineForm& a, const AffineForm& b);
Rat af_eval(const AffineForm& f, const Env& env);

/// Affine change of parameters: every variable named in `repl` is replaced by
/// the given form; unnamed variables stay symbolic.
AffineForm af_substitute(const AffineForm& f, const std::map<std::string, AffineForm>& repl);

/// Expression tree for exact min/max/positive-part coefficient formulas.
/// Pos(x) is Max(x, 0) by definition and is treated as such everywhere.
class PwlExpr {
  public:
    enum class Op { Affine, Min, Max, Pos, Sum, Scale };

    static PwlExpr affine(AffineForm f);
    static PwlExpr constant(const Rat& c);
    static PwlExpr variable(const std::string& name);
    static PwlExpr min(std::vector<PwlExpr> xs);
    static PwlExpr max(std::vector<PwlExpr> xs);
    static PwlExpr pos(PwlExpr x);
    static PwlExpr sum(std::vector<PwlExpr> xs);
    static PwlExpr scale(const Rat& c, PwlExpr x);

    Op op = Op::Affine;
    AffineForm form;               // Affine payload
    std::vector<PwlExpr> children; // Min/Max/Sum/Pos/Scale payload
    Rat factor{1};                 // Scale payload
};

/// Exact evaluation; throws std::invalid_argument naming any parameter
/// absent from `env`.
Rat eval(const PwlExpr& expr, const Env& env);

/// Structural substitution of parameters throughout the expression tree.
PwlExpr substitute(const PwlExpr& expr, const std::map<std::string, AffineForm>& repl);

/// All parameter names appearing in the expression.
std::set<std::string> parameters(const PwlExpr& expr);

/// One maximal region on which the expression is a single affine form.
struct BranchCell {
    AffineForm active_form;
    ratgeom::HPoly guard;  // canonical H-description over the parameter order
};

/// Case-split decomposition of `expr` over a bounded full-dimensional
/// `domain` (coordinates ordered by `params`). Cells cover the domain with
/// pairwise disjoint interiors; each cell is certified by evaluating the
/// expression against its active form at the cell centroid and every vertex.
std::vector<BranchCell> branches(const PwlExpr& expr, const ratgeom::HPoly& domain,
                                 const std::vector<std::string>& params);

}  // namespace okbody::pwl
