#pragma once

#include "okbody/ratgeom.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace okbody::surface {

/// A prime curve class tracked by a model. Curves with nonnegative
/// self-intersection are allowed only as auxiliary test curves (they are
/// consulted for positivity checks but can never enter a negative part).
struct NegativeCurve {
    std::string name;
    QVec cls;
    bool auxiliary = false;
};

/// Numerical model of a smooth projective surface: a basis of the relevant
/// part of its Neron-Severi lattice with the exact intersection pairing,
/// the curves that can occur in negative parts, and optional cone data.
struct SurfaceModel {
    std::string label;
    std::vector<std::string> basis_names;
    QMat pairing;  // symmetric
    std::vector<NegativeCurve> negative_curves;
    std::optional<std::vector<QVec>> mori_generators;       // nef test set
    std::optional<std::vector<QVec>> effective_generators;  // psef cone

    std::size_t dim() const { return basis_names.size(); }
};

/// Checks the structural invariants (symmetry, lengths, curve negativity);
/// throws std::invalid_argument describing the first violation.
void validate(const SurfaceModel& model);

Rat intersection(const SurfaceModel& model, const QVec& a, const QVec& b);

const NegativeCurve* find_curve(const SurfaceModel& model, const std::string& name);

struct SurfaceDivisor {
    QVec cls;
};

struct ZariskiDecomp {
    SurfaceDivisor positive;
    std::map<std::string, Rat> negative_coeffs;  // curve name -> coefficient > 0
};

/// Zariski decomposition by the iterative fixpoint on the growing support:
/// start from the curves the class meets negatively, zero the positive part
/// against the support, enlarge while the candidate still meets a listed
/// curve negatively. Errors mention incomplete curve data rather than
/// guessing at unlisted curves.
ZariskiDecomp zariski(const SurfaceModel& model, const SurfaceDivisor& d);

/// Nefness against the model's Mori generators. Errors when absent.
bool is_nef(const SurfaceModel& model, const SurfaceDivisor& d);

/// Largest t with d - t*flag pseudoeffective (membership in the effective
/// generator cone). Errors when the model carries no effective generators.
Rat psef_threshold(const SurfaceModel& model, const SurfaceDivisor& d, const QVec& flag);

/// One maximal interval of the parametric sweep t -> P(d - t*flag) on which
/// the negative-part support is constant; beta(t) = beta0 + beta1*t there.
struct SweepPiece {
    Rat t_lo, t_hi;
    Rat beta0, beta1;
    std::vector<std::string> support;
};

/// Exact breakpoint decomposition of beta(t) = P(d - t*flag) . flag over
/// [0, t_hi]; each piece is certified affine by three independent
/// decompositions (endpoints and midpoint).
std::vector<SweepPiece> sweep_beta(const SurfaceModel& model, const SurfaceDivisor& d,
                                   const QVec& flag, const Rat& t_hi);

/// The two-coordinate valuation polygon of a big divisor: all (t, x) with
/// 0 <= t <= threshold and 0 <= x <= beta(t), as an exact 2D polytope.
/// `infinitesimal` marks a flag coming from a blown-up very general point
/// (self-intersection -1); otherwise the flag must itself be nef when Mori
/// data is present. `t_max` optionally truncates the sweep.
ratgeom::VPoly nobody_surface(const SurfaceModel& model, const SurfaceDivisor& d,
                              const QVec& flag, bool infinitesimal,
                              const std::optional<Rat>& t_max = {});

/// Blow up a point lying on the named curves with the given multiplicities:
/// extends the basis by an exceptional class of square -1, replaces each
/// listed curve by its strict transform, and re-derives auxiliary flags from
/// the new self-intersections. Cone generator data does not transport and is
/// dropped.
SurfaceModel blowup_point(const SurfaceModel& model,
                          const std::map<std::string, long>& multiplicities,
                          const std::string& new_name);

/// Geometrically ruled surface over a curve, projectivization of a split
/// bundle of degrees (d1, d2) with d1 >= d2: basis (xi, f), xi^2 = d1+d2,
/// xi.f = 1, f^2 = 0; effective cone <xi - d1 f, f>, nef cone <xi - d2 f, f>.
SurfaceModel ruled_surface(const std::string& genus_label, long d1, long d2);

/// Cone package of the symmetric five-parameter slice of the 19-fold blown
/// plane appearing under the genus-two family: the invariant pairing, the
/// six nefness inequalities, both generator lists, and the full pairing
/// table of nef generators against effective generators and H.
struct SymmetricConeData {
    QMat pairing;                     // 5x5 on (L, E, E7, G, N) orbit sums
    ratgeom::HPoly nef_ineqs;         // six rows, offsets zero
    std::vector<QVec> nef_gens;       // eight generators
    std::vector<QVec> eff_gens;       // six generators
    std::vector<std::string> eff_names;
    QMat intersection_table;          // nef gens x (eff gens, H)
    QVec h_class;                     // H = L + E + 2G + 3N
    SurfaceModel model;               // the 5-dim symmetric model itself
};
SymmetricConeData p2blow7_symmetric_cones();

/// Builds one of the named stock surface models used across the package:
/// "two_curves", "two_curves_diagonal", "genus2_jacobian", "p2_blow_1",
/// "p2_blow_3_cremona", "z_model", "p2blow7_symmetric", or "ruled(g,d1,d2)".
/// Throws std::invalid_argument for an unknown label.
SurfaceModel standard_model(const std::string& label);
std::vector<std::string> standard_model_labels();

}  // namespace okbody::surface
