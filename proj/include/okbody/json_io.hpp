#pragma once

#include "okbody/okounkov.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace okbody::jsonio {

using json = nlohmann::json;

/// Rationals serialize as ["num", "den"] pairs of decimal strings so that
/// arbitrary-precision values survive any JSON reader.
json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

json qvec_to_json(const QVec& v);
QVec qvec_from_json(const json& j);
json qmat_to_json(const QMat& m);
QMat qmat_from_json(const json& j);

/// Polytope schema: {"dim": n, "vertices": [...], "rays": [...],
/// "inequalities": [{"normal": [...], "offset": [...]}], "equalities": [...]}.
/// The V-side and H-side writers fill their halves; the combined writer emits
/// both representations of the same set.
json vpoly_to_json(const ratgeom::VPoly& v);
json hpoly_to_json(const ratgeom::HPoly& h);
json polytope_to_json(const ratgeom::VPoly& v, const ratgeom::HPoly& h);
ratgeom::VPoly vpoly_from_json(const json& j);
ratgeom::HPoly hpoly_from_json(const json& j);

json affine_to_json(const pwl::AffineForm& f);
pwl::AffineForm affine_from_json(const json& j);

/// Expression trees: {"op": "affine"|"min"|"max"|"pos"|"sum"|"scale", ...}.
json pwl_to_json(const pwl::PwlExpr& e);
pwl::PwlExpr pwl_from_json(const json& j);

json surface_model_to_json(const surface::SurfaceModel& m);
surface::SurfaceModel surface_model_from_json(const json& j);

json tower_to_json(const threefold::Tower& tw);
threefold::Tower tower_from_json(const json& j);

/// Valuation bodies carry their coordinate names plus both representations.
json nobody_to_json(const okounkov::NOBody& b);
okounkov::NOBody nobody_from_json(const json& j);

/// Slice payload: height, carrier component, surface model label, restricted
/// class, sweep flag, breakpoint bound, and the exact polygon.
json slice_to_json(const okounkov::SlicePolygon& sl);

/// OFF text for a bounded 3-dimensional V-polytope: vertex coordinates in
/// decimal (exact when terminating, otherwise truncated at 12 places - this
/// is a renderer feed, not kernel data), facets triangulated fan-wise with
/// outward orientation. Deterministic for identical inputs.
std::string off_3d(const ratgeom::VPoly& v);

/// CSV with a header row; cells are exact "p/q" strings.
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<Rat>>& rows);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);
json parse_file(const std::string& path);
void write_file(const std::string& path, const json& j);

/// Shipped data files: maps "cxp2_tower.json" etc. to the builders that must
/// reproduce them, for transcription checks.
std::vector<std::pair<std::string, std::string>> shipped_surface_files();
std::vector<std::pair<std::string, std::string>> shipped_tower_files();

/// Directory holding the shipped data files: $OKBODY_DATA when set, else the
/// source-tree default.
std::string data_dir();

}  // namespace okbody::jsonio
