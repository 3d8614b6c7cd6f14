#pragma once

#include "okbody/linalg.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace okbody::ratgeom {

/// One linear condition `normal . x >= offset` (or `= offset` in an equality
/// block). Normals are kept primitive-integer after canonicalization.
struct HalfSpace {
    QVec normal;
    Rat offset;
};

/// Intersection of half-spaces and hyperplanes in Q^dim.
struct HPoly {
    std::size_t dim = 0;
    std::vector<HalfSpace> inequalities;
    std::vector<HalfSpace> equalities;
};

/// Convex hull of `vertices` plus the recession cone of `rays`.
/// A polyhedron containing a line carries the line as a +/- ray pair.
/// Both lists empty means the empty set (only ever produced by `slice_poly`
/// and friends; conversions reject genuinely infeasible inputs loudly).
struct VPoly {
    std::size_t dim = 0;
    std::vector<QVec> vertices;
    std::vector<QVec> rays;

    bool empty() const { return vertices.empty() && rays.empty(); }
};

/// Polyhedral cone: conic hull of `rays` plus the linear span of `lineality`.
struct QCone {
    std::size_t dim = 0;
    std::vector<QVec> rays;
    std::vector<QVec> lineality;
};

/// Extreme rays and lineality of { x : A x >= 0 }, by double description
/// with insertion in row order and rank-based adjacency pruning.
QCone cone_from_inequalities(std::size_t dim, const QMat& rows);

/// Facets of cone(rays) + span(lineality), via duality (one DD engine).
/// Returned rows r satisfy r . x >= 0 on the cone; lineality of the dual is
/// returned as `equalities` normals.
struct ConeHRep {
    QMat inequality_rows;
    QMat equality_rows;
};
ConeHRep cone_to_inequalities(const QCone& c);

/// Dual cone { y : <y, r> >= 0 for all generators, <y, l> = 0 on lineality }
/// under the bilinear pairing `m` (defaults to identity when empty).
/// Throws if the pairing is degenerate on the span of `c`.
QCone dual_cone(const QCone& c, const QMat& m = {});

/// Minimal V-representation. Throws std::domain_error when infeasible.
VPoly hrep_to_vrep(const HPoly& h);

/// Irredundant facet/affine-hull description. `v` must be nonempty.
HPoly vrep_to_hrep(const VPoly& v);

/// Exact point membership.
bool contains(const HPoly& h, const QVec& x);

/// Image under coordinate projection onto `kept` (indices, in order).
VPoly project(const VPoly& v, const std::vector<std::size_t>& kept);
HPoly project(const HPoly& h, const std::vector<std::size_t>& kept);

/// Cross-section { x : x[axis] = value }, embedded in the remaining
/// coordinates; empty result (not an error) when `value` misses the range.
VPoly slice_poly(const VPoly& v, std::size_t axis, const Rat& value);
VPoly slice_poly(const HPoly& h, std::size_t axis, const Rat& value);

/// Exact Euclidean volume of a bounded polytope; 0 when the affine hull is
/// lower-dimensional. Throws on rays (unbounded). Triangulates by a fan over
/// the centroid, recursively per facet; simplex volumes by determinant/dim!.
Rat volume(const VPoly& v);

/// Set equality by mutual containment of generators in facet descriptions.
bool equal_sets(const VPoly& a, const VPoly& b);
bool equal_sets(const HPoly& a, const HPoly& b);
bool equal_sets(const VPoly& a, const HPoly& b);

/// Convex hull of a point set as a minimal VPoly (no rays).
VPoly hull_of_points(std::size_t dim, const std::vector<QVec>& points);

/// Canonical minimal forms (conversion round-trip).
VPoly canonical(const VPoly& v);
HPoly canonical(const HPoly& h);

/// Intersection of H-reps over the same space.
HPoly intersect(const HPoly& a, const HPoly& b);

/// Bounded axis-aligned range of x[axis] over a polytope.
struct Interval {
    Rat lo, hi;
};
Interval coordinate_range(const VPoly& v, std::size_t axis);

/// Same vertex/ray sets up to reordering and ray rescaling.
bool same_generators(const VPoly& a, const VPoly& b);

std::string to_string(const QVec& v);

}  // namespace okbody::ratgeom
