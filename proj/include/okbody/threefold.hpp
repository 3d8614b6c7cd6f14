#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "okbody/pwl.hpp"
#include "okbody/surface.hpp"

namespace okbody::threefold {

/// Symmetric trilinear intersection form on a labelled divisor basis.
class TripleForm {
  public:
    TripleForm() = default;
    explicit TripleForm(std::vector<std::string> basis_names);

    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& basis() const { return names_; }

    /// Sets the coefficient on all permutations of (i, j, k).
    void set(std::size_t i, std::size_t j, std::size_t k, const Rat& value);
    Rat coefficient(std::size_t i, std::size_t j, std::size_t k) const;
    Rat eval(const QVec& a, const QVec& b, const QVec& c) const;

    /// Returns a copy with one extra basis element and unchanged coefficients.
    TripleForm extended(const std::string& name) const;

  private:
    std::vector<std::string> names_;
    std::vector<Rat> coeffs_;  // dense, dim^3
};

/// One blowup step over the product base: a very general point, or a smooth
/// curve with the degrees of the earlier basis classes on the center and the
/// pair of conormal twist degrees (the exceptional divisor cubes to their sum).
struct TowerStage {
    std::string name;
    bool point = false;
    QVec center_degrees;
    Rat delta1{0}, delta2{0};
};

/// An irreducible surface in the final model together with its identified
/// abstract model and the restriction map from tower classes to model classes.
struct Component {
    std::string name;
    QVec cls;
    surface::SurfaceModel model;
    QMat restriction;  // model.dim() rows, tower dim columns
};

struct ConeInfo {
    std::vector<std::string> names;
    std::vector<QVec> gens;  // in the rank-one-blowup basis
};

/// A blowup tower over a product threefold, carrying everything the package
/// derives for it: the intersection form, the component surfaces with their
/// restriction maps, the piecewise-linear decomposition ledgers for the
/// sweep ray, cone data after the first blowup, and the valuation-body data.
struct Tower {
    std::string label;
    std::vector<std::string> params;  // degree parameters followed by "t"
    std::size_t base_rank = 0;
    TripleForm form;
    std::vector<TowerStage> stages;
    std::vector<Component> components;

    /// Coordinates of the swept class over the final basis, affine in params.
    std::vector<pwl::AffineForm> ray_class;

    /// Component coefficients of the positive/negative part of the swept
    /// class, as piecewise-linear expressions in the parameters.
    std::map<std::string, pwl::PwlExpr> positive_ledger;
    std::map<std::string, pwl::PwlExpr> negative_ledger;

    /// Pseudoeffective threshold of the sweep in the degree parameters,
    /// plus nef/movable thresholds after the first blowup when known.
    pwl::PwlExpr mu;
    std::map<std::string, pwl::PwlExpr> thresholds;

    ConeInfo stage1_eff;
    std::optional<ConeInfo> stage1_mov, stage1_nef;

    /// Valuation-body inequality rows (affine forms over params and body
    /// coordinates, each required nonnegative); empty when the body is
    /// assembled from the ledger instead.
    std::vector<pwl::AffineForm> body_rows;
    std::vector<std::string> body_coords;

    std::size_t dim() const { return form.dim(); }
    const std::vector<std::string>& basis() const { return form.basis(); }
};

/// Decomposition of the swept class at specific parameter values.
struct SigmaDecomp {
    QVec ray;       // the class itself
    QVec positive;  // nef part
    QVec negative;  // effective remainder
    std::map<std::string, Rat> positive_coeffs;  // by component name
    std::map<std::string, Rat> negative_coeffs;  // only nonzero entries
};

/// Nefness verdict for a class checked on every component surface.
struct NefReport {
    bool nef = true;
    std::string component;  // first failing component, when not nef
    std::string curve;      // name or coordinates of the failing curve
};

/// Builds one of the three families: "cxp2", "ccc", "cxjac".
Tower tower(const std::string& label);
std::vector<std::string> tower_labels();

/// Triple product of three classes in the tower basis.
Rat triple(const Tower& tw, const QVec& a, const QVec& b, const QVec& c);

/// Index of a basis class by name; throws std::invalid_argument when absent.
std::size_t basis_index(const Tower& tw, const std::string& name);

/// Evaluates the decomposition ledgers at the given parameter values.
/// Requires positive degree parameters and 0 <= t <= mu.
SigmaDecomp psigma(const Tower& tw, const std::map<std::string, Rat>& values);

/// Volume of the swept class at the given parameters (cube of the nef part).
Rat vol_ray(const Tower& tw, const std::map<std::string, Rat>& values);

/// Checks nefness of a class by restricting to every component surface.
NefReport verify_nef3(const Tower& tw, const QVec& cls);

/// Degree bound from effective divisors after the first blowup: the minimum
/// of (L^2 . D) / mult over generators D with positive multiplicity at the
/// blown-up point, where L is the swept class at t = 0.
Rat divisor_degree_bound(const Tower& tw, const std::map<std::string, Rat>& values);

/// The swept class at t = 0 in the rank-one-blowup basis (padded with zeros
/// in the final basis coordinates beyond the first blowup).
QVec stage1_ray(const Tower& tw, const std::map<std::string, Rat>& values);

}  // namespace okbody::threefold
