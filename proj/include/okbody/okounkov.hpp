#pragma once

#include "okbody/threefold.hpp"

#include <map>
#include <string>

namespace okbody::okounkov {

/// A valuation body in both representations. Coordinates are the tower's
/// body coordinates: the blow-up order first, then the two flag coordinates
/// on the central fiber (prefixed by the gluing parameter for 4D bodies).
struct NOBody {
    std::size_t dim = 0;
    std::vector<std::string> coords;
    ratgeom::VPoly vrep;
    ratgeom::HPoly hrep;
};

/// Builds the body of a family at fixed degree parameters (all parameters
/// except "t"). Families carrying facet rows are converted directly;
/// otherwise the body is assembled from the decomposition ledger as a union
/// of vertical prisms over the branch cells of its width/height functions,
/// and the assembly is certified exactly by comparing the summed prism
/// volumes against the volume of their convex hull.
NOBody body(const threefold::Tower& tw, const std::map<std::string, Rat>& degrees);

/// One-parameter families only: the 4D polytope swept out by the bodies as
/// the degree parameter runs over [0, 1], in (s, body coordinates).
NOBody glue4d(const threefold::Tower& tw);

/// Fixed-t cross-section data: the carrier component, the restriction of the
/// positive part to it, the flag class completing the coordinate system, the
/// exact section polygon, and its width along the flag sweep.
struct SlicePolygon {
    Rat t;
    std::string component;
    surface::SurfaceModel model;
    QVec cls;                // positive part restricted to the carrier
    QVec flag;               // sweep class on the carrier
    Rat x_max;               // pseudoeffective threshold of cls - x*flag
    ratgeom::VPoly polygon;  // exact 2D section
};

/// Computes the section of the family's body at the given parameters.
/// Requires 0 < t <= mu; throws std::domain_error otherwise.
SlicePolygon slice_at(const threefold::Tower& tw, const std::map<std::string, Rat>& values);

/// Seshadri constant of the square of the polarization at a very general
/// point: the largest t keeping the pulled-back curve class minus t times a
/// line in the exceptional plane movable, computed against the effective
/// generators after the first blow-up.
Rat seshadri_curve(const threefold::Tower& tw, const std::map<std::string, Rat>& degrees);

/// Compares the Seshadri constant of the squared polarization (lhs) with
/// twice the area of the body's projection along its first coordinate (rhs).
/// The lhs always dominates; a computed lhs < rhs throws std::logic_error
/// since it would contradict the general lower bound.
struct ProjectionCheck {
    Rat lhs;        // curve Seshadri constant
    Rat rhs;        // 2 * area of the projected body
    bool equality = false;
};
ProjectionCheck projection_area_check(const threefold::Tower& tw,
                                      const std::map<std::string, Rat>& degrees);

}  // namespace okbody::okounkov
