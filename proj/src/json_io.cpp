#include "okbody/json_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace okbody::jsonio {

using pwl::AffineForm;
using pwl::PwlExpr;
using ratgeom::HalfSpace;
using ratgeom::HPoly;
using ratgeom::VPoly;

json rat_to_json(const Rat& r) {
    return json::array({numerator(r).str(), denominator(r).str()});
}

Rat rat_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("rational must be a [num, den] pair");
    return make_rat(Int(j[0].get<std::string>()), Int(j[1].get<std::string>()));
}

json qvec_to_json(const QVec& v) {
    json out = json::array();
    for (const Rat& x : v) out.push_back(rat_to_json(x));
    return out;
}

QVec qvec_from_json(const json& j) {
    QVec out;
    for (const auto& x : j) out.push_back(rat_from_json(x));
    return out;
}

json qmat_to_json(const QMat& m) {
    json out = json::array();
    for (const QVec& row : m) out.push_back(qvec_to_json(row));
    return out;
}

QMat qmat_from_json(const json& j) {
    QMat out;
    for (const auto& row : j) out.push_back(qvec_from_json(row));
    return out;
}

namespace {

json halfspaces_to_json(const std::vector<HalfSpace>& rows) {
    json out = json::array();
    for (const auto& hs : rows)
        out.push_back({{"normal", qvec_to_json(hs.normal)}, {"offset", rat_to_json(hs.offset)}});
    return out;
}

std::vector<HalfSpace> halfspaces_from_json(const json& j) {
    std::vector<HalfSpace> out;
    for (const auto& row : j)
        out.push_back({qvec_from_json(row.at("normal")), rat_from_json(row.at("offset"))});
    return out;
}

}  // namespace

json vpoly_to_json(const VPoly& v) {
    json out;
    out["dim"] = v.dim;
    out["vertices"] = json::array();
    for (const QVec& p : v.vertices) out["vertices"].push_back(qvec_to_json(p));
    out["rays"] = json::array();
    for (const QVec& r : v.rays) out["rays"].push_back(qvec_to_json(r));
    return out;
}

json hpoly_to_json(const HPoly& h) {
    json out;
    out["dim"] = h.dim;
    out["inequalities"] = halfspaces_to_json(h.inequalities);
    out["equalities"] = halfspaces_to_json(h.equalities);
    return out;
}

json polytope_to_json(const VPoly& v, const HPoly& h) {
    json out = vpoly_to_json(v);
    out.update(hpoly_to_json(h));
    return out;
}

VPoly vpoly_from_json(const json& j) {
    VPoly out;
    out.dim = j.at("dim").get<std::size_t>();
    for (const auto& p : j.at("vertices")) out.vertices.push_back(qvec_from_json(p));
    for (const auto& r : j.at("rays")) out.rays.push_back(qvec_from_json(r));
    return out;
}

HPoly hpoly_from_json(const json& j) {
    HPoly out;
    out.dim = j.at("dim").get<std::size_t>();
    out.inequalities = halfspaces_from_json(j.at("inequalities"));
    out.equalities = halfspaces_from_json(j.at("equalities"));
    return out;
}

json affine_to_json(const AffineForm& f) {
    json coeffs = json::object();
    for (const auto& [name, c] : f.coefficients) coeffs[name] = rat_to_json(c);
    return {{"constant", rat_to_json(f.constant)}, {"coefficients", coeffs}};
}

AffineForm affine_from_json(const json& j) {
    AffineForm out;
    out.constant = rat_from_json(j.at("constant"));
    for (const auto& [name, c] : j.at("coefficients").items())
        out.coefficients[name] = rat_from_json(c);
    return pwl::af_normalized(out);
}

json pwl_to_json(const PwlExpr& e) {
    switch (e.op) {
        case PwlExpr::Op::Affine:
            return {{"op", "affine"}, {"form", affine_to_json(e.form)}};
        case PwlExpr::Op::Scale: {
            json out = {{"op", "scale"}, {"factor", rat_to_json(e.factor)}};
            out["children"] = json::array({pwl_to_json(e.children[0])});
            return out;
        }
        default: {
            const char* name = e.op == PwlExpr::Op::Min   ? "min"
                               : e.op == PwlExpr::Op::Max ? "max"
                               : e.op == PwlExpr::Op::Pos ? "pos"
                                                          : "sum";
            json kids = json::array();
            for (const auto& c : e.children) kids.push_back(pwl_to_json(c));
            return {{"op", name}, {"children", kids}};
        }
    }
}

PwlExpr pwl_from_json(const json& j) {
    const std::string op = j.at("op").get<std::string>();
    if (op == "affine") return PwlExpr::affine(affine_from_json(j.at("form")));
    std::vector<PwlExpr> kids;
    for (const auto& c : j.at("children")) kids.push_back(pwl_from_json(c));
    if (op == "scale") {
        if (kids.size() != 1) throw std::invalid_argument("scale takes one child");
        return PwlExpr::scale(rat_from_json(j.at("factor")), std::move(kids[0]));
    }
    if (op == "pos") {
        if (kids.size() != 1) throw std::invalid_argument("pos takes one child");
        return PwlExpr::pos(std::move(kids[0]));
    }
    if (op == "min") return PwlExpr::min(std::move(kids));
    if (op == "max") return PwlExpr::max(std::move(kids));
    if (op == "sum") return PwlExpr::sum(std::move(kids));
    throw std::invalid_argument("unknown expression op: " + op);
}

namespace {

json gens_to_json(const std::vector<QVec>& gens) {
    json out = json::array();
    for (const QVec& g : gens) out.push_back(qvec_to_json(g));
    return out;
}

std::vector<QVec> gens_from_json(const json& j) {
    std::vector<QVec> out;
    for (const auto& g : j) out.push_back(qvec_from_json(g));
    return out;
}

}  // namespace

json surface_model_to_json(const surface::SurfaceModel& m) {
    json out;
    out["label"] = m.label;
    out["basis"] = m.basis_names;
    out["pairing"] = qmat_to_json(m.pairing);
    out["negative_curves"] = json::array();
    for (const auto& c : m.negative_curves)
        out["negative_curves"].push_back(
            {{"name", c.name}, {"cls", qvec_to_json(c.cls)}, {"auxiliary", c.auxiliary}});
    out["mori_generators"] = m.mori_generators ? gens_to_json(*m.mori_generators) : json();
    out["effective_generators"] =
        m.effective_generators ? gens_to_json(*m.effective_generators) : json();
    return out;
}

surface::SurfaceModel surface_model_from_json(const json& j) {
    surface::SurfaceModel m;
    m.label = j.at("label").get<std::string>();
    m.basis_names = j.at("basis").get<std::vector<std::string>>();
    m.pairing = qmat_from_json(j.at("pairing"));
    for (const auto& c : j.at("negative_curves"))
        m.negative_curves.push_back({c.at("name").get<std::string>(),
                                     qvec_from_json(c.at("cls")),
                                     c.at("auxiliary").get<bool>()});
    if (!j.at("mori_generators").is_null())
        m.mori_generators = gens_from_json(j.at("mori_generators"));
    if (!j.at("effective_generators").is_null())
        m.effective_generators = gens_from_json(j.at("effective_generators"));
    surface::validate(m);
    return m;
}

namespace {

json cone_to_json(const threefold::ConeInfo& c) {
    return {{"names", c.names}, {"gens", gens_to_json(c.gens)}};
}

threefold::ConeInfo cone_from_json(const json& j) {
    return {j.at("names").get<std::vector<std::string>>(), gens_from_json(j.at("gens"))};
}

json ledger_to_json(const std::map<std::string, PwlExpr>& ledger) {
    json out = json::object();
    for (const auto& [name, e] : ledger) out[name] = pwl_to_json(e);
    return out;
}

std::map<std::string, PwlExpr> ledger_from_json(const json& j) {
    std::map<std::string, PwlExpr> out;
    for (const auto& [name, e] : j.items()) out.emplace(name, pwl_from_json(e));
    return out;
}

}  // namespace

json tower_to_json(const threefold::Tower& tw) {
    json out;
    out["label"] = tw.label;
    out["params"] = tw.params;
    out["base_rank"] = tw.base_rank;
    out["basis"] = tw.basis();

    json triples = json::array();
    for (std::size_t i = 0; i < tw.dim(); ++i)
        for (std::size_t j = i; j < tw.dim(); ++j)
            for (std::size_t k = j; k < tw.dim(); ++k) {
                const Rat c = tw.form.coefficient(i, j, k);
                if (c != 0)
                    triples.push_back({{"ijk", {i, j, k}}, {"value", rat_to_json(c)}});
            }
    out["triple_form"] = triples;

    out["stages"] = json::array();
    for (const auto& s : tw.stages)
        out["stages"].push_back({{"name", s.name},
                                 {"point", s.point},
                                 {"center_degrees", qvec_to_json(s.center_degrees)},
                                 {"delta1", rat_to_json(s.delta1)},
                                 {"delta2", rat_to_json(s.delta2)}});

    out["components"] = json::array();
    for (const auto& c : tw.components)
        out["components"].push_back({{"name", c.name},
                                     {"cls", qvec_to_json(c.cls)},
                                     {"model", surface_model_to_json(c.model)},
                                     {"restriction", qmat_to_json(c.restriction)}});

    out["ray_class"] = json::array();
    for (const auto& f : tw.ray_class) out["ray_class"].push_back(affine_to_json(f));

    out["positive_ledger"] = ledger_to_json(tw.positive_ledger);
    out["negative_ledger"] = ledger_to_json(tw.negative_ledger);
    out["mu"] = pwl_to_json(tw.mu);
    out["thresholds"] = ledger_to_json(tw.thresholds);

    out["stage1_eff"] = cone_to_json(tw.stage1_eff);
    out["stage1_mov"] = tw.stage1_mov ? cone_to_json(*tw.stage1_mov) : json();
    out["stage1_nef"] = tw.stage1_nef ? cone_to_json(*tw.stage1_nef) : json();

    out["body_rows"] = json::array();
    for (const auto& f : tw.body_rows) out["body_rows"].push_back(affine_to_json(f));
    out["body_coords"] = tw.body_coords;
    return out;
}

threefold::Tower tower_from_json(const json& j) {
    threefold::Tower tw;
    tw.label = j.at("label").get<std::string>();
    tw.params = j.at("params").get<std::vector<std::string>>();
    tw.base_rank = j.at("base_rank").get<std::size_t>();

    tw.form = threefold::TripleForm(j.at("basis").get<std::vector<std::string>>());
    for (const auto& t : j.at("triple_form")) {
        const auto ijk = t.at("ijk").get<std::vector<std::size_t>>();
        if (ijk.size() != 3) throw std::invalid_argument("triple index must have length 3");
        tw.form.set(ijk[0], ijk[1], ijk[2], rat_from_json(t.at("value")));
    }

    for (const auto& s : j.at("stages"))
        tw.stages.push_back({s.at("name").get<std::string>(), s.at("point").get<bool>(),
                             qvec_from_json(s.at("center_degrees")),
                             rat_from_json(s.at("delta1")), rat_from_json(s.at("delta2"))});

    for (const auto& c : j.at("components"))
        tw.components.push_back({c.at("name").get<std::string>(), qvec_from_json(c.at("cls")),
                                 surface_model_from_json(c.at("model")),
                                 qmat_from_json(c.at("restriction"))});

    for (const auto& f : j.at("ray_class")) tw.ray_class.push_back(affine_from_json(f));
    tw.positive_ledger = ledger_from_json(j.at("positive_ledger"));
    tw.negative_ledger = ledger_from_json(j.at("negative_ledger"));
    tw.mu = pwl_from_json(j.at("mu"));
    tw.thresholds = ledger_from_json(j.at("thresholds"));

    tw.stage1_eff = cone_from_json(j.at("stage1_eff"));
    if (!j.at("stage1_mov").is_null()) tw.stage1_mov = cone_from_json(j.at("stage1_mov"));
    if (!j.at("stage1_nef").is_null()) tw.stage1_nef = cone_from_json(j.at("stage1_nef"));

    for (const auto& f : j.at("body_rows")) tw.body_rows.push_back(affine_from_json(f));
    tw.body_coords = j.at("body_coords").get<std::vector<std::string>>();
    return tw;
}

json nobody_to_json(const okounkov::NOBody& b) {
    json out = polytope_to_json(b.vrep, b.hrep);
    out["dim"] = b.dim;
    out["coords"] = b.coords;
    return out;
}

okounkov::NOBody nobody_from_json(const json& j) {
    okounkov::NOBody b;
    b.dim = j.at("dim").get<std::size_t>();
    b.coords = j.at("coords").get<std::vector<std::string>>();
    b.vrep = vpoly_from_json(j);
    b.hrep = hpoly_from_json(j);
    return b;
}

json slice_to_json(const okounkov::SlicePolygon& sl) {
    return {{"t", rat_to_json(sl.t)},
            {"component", sl.component},
            {"model", sl.model.label},
            {"class", qvec_to_json(sl.cls)},
            {"flag", qvec_to_json(sl.flag)},
            {"x_max", rat_to_json(sl.x_max)},
            {"polygon", vpoly_to_json(sl.polygon)}};
}

namespace {

QVec cross3(const QVec& a, const QVec& b) {
    const Rat x = a[1] * b[2] - a[2] * b[1];
    const Rat y = a[2] * b[0] - a[0] * b[2];
    const Rat z = a[0] * b[1] - a[1] * b[0];
    return {x, y, z};
}

/// Decimal rendering of a rational, truncated toward zero at 12 places.
std::string decimal_string(const Rat& r) {
    const bool neg = r < 0;
    Int num = numerator(rat_abs(r)), den = denominator(r);
    Int whole = num / den, rem = num % den;
    std::string out = (neg && (whole != 0 || rem != 0)) ? "-" : "";
    out += whole.str();
    if (rem != 0) {
        std::string frac;
        for (int i = 0; i < 12 && rem != 0; ++i) {
            rem *= 10;
            const Int digit = rem / den;
            frac += digit.str();
            rem %= den;
        }
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
    }
    return out;
}

}  // namespace

std::string off_3d(const VPoly& v) {
    if (v.dim != 3 || !v.rays.empty())
        throw std::invalid_argument("OFF export requires a bounded 3d polytope");
    const VPoly body = ratgeom::canonical(v);
    if (affine_rank(body.vertices) != 3)
        throw std::invalid_argument("OFF export requires a full-dimensional polytope");
    const HPoly facets = ratgeom::vrep_to_hrep(body);

    std::vector<std::vector<std::size_t>> faces;
    for (const auto& hs : facets.inequalities) {
        std::vector<std::size_t> incident;
        for (std::size_t i = 0; i < body.vertices.size(); ++i)
            if (dot(hs.normal, body.vertices[i]) == hs.offset) incident.push_back(i);
        if (incident.size() < 3) throw std::logic_error("facet with fewer than 3 vertices");

        // order the facet cycle by exact angle around the centroid
        QVec centroid = qvec_zero(3);
        for (const std::size_t i : incident) centroid = add(centroid, body.vertices[i]);
        centroid = scale(make_rat(1, static_cast<long>(incident.size())), centroid);
        QVec u;
        for (const std::size_t i : incident) {
            u = sub(body.vertices[i], centroid);
            if (!is_zero(u)) break;
        }
        const QVec w = cross3(hs.normal, u);
        auto planar = [&](std::size_t i) {
            const QVec d = sub(body.vertices[i], centroid);
            return std::pair<Rat, Rat>{dot(d, u), dot(d, w)};
        };
        std::sort(incident.begin(), incident.end(), [&](std::size_t a, std::size_t b) {
            const auto [ax, ay] = planar(a);
            const auto [bx, by] = planar(b);
            const int ha = (ay > 0 || (ay == 0 && ax > 0)) ? 0 : 1;
            const int hb = (by > 0 || (by == 0 && bx > 0)) ? 0 : 1;
            if (ha != hb) return ha < hb;
            const Rat cr = ax * by - ay * bx;
            if (cr != 0) return cr > 0;
            return a < b;
        });
        // the sort is counterclockwise about the inward normal; OFF wants
        // counterclockwise seen from outside, so flip
        std::reverse(incident.begin(), incident.end());
        const QVec t1 = sub(body.vertices[incident[1]], body.vertices[incident[0]]);
        const QVec t2 = sub(body.vertices[incident[2]], body.vertices[incident[0]]);
        if (dot(cross3(t1, t2), hs.normal) > 0)
            std::reverse(incident.begin(), incident.end());
        faces.push_back(incident);
    }
    std::sort(faces.begin(), faces.end());

    std::size_t triangles = 0;
    for (const auto& f : faces) triangles += f.size() - 2;
    std::ostringstream os;
    os << "OFF\n" << body.vertices.size() << " " << triangles << " 0\n";
    for (const QVec& p : body.vertices)
        os << decimal_string(p[0]) << " " << decimal_string(p[1]) << " "
           << decimal_string(p[2]) << "\n";
    for (const auto& f : faces)
        for (std::size_t i = 1; i + 1 < f.size(); ++i)
            os << "3 " << f[0] << " " << f[i] << " " << f[i + 1] << "\n";
    return os.str();
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<Rat>>& rows) {
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i)
        os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw std::invalid_argument("csv row width differs from header");
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << rat_to_string(row[i]);
        os << "\n";
    }
    return os.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return json::parse(in);
}

void write_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    out << dump(j);
}

std::vector<std::pair<std::string, std::string>> shipped_surface_files() {
    return {{"two_curves.json", "two_curves"},
            {"two_curves_diagonal.json", "two_curves_diagonal"},
            {"genus2_jacobian.json", "genus2_jacobian"},
            {"p2_blow_1.json", "p2_blow_1"},
            {"p2_blow_3_cremona.json", "p2_blow_3_cremona"},
            {"p2blow7_tower.json", "z_model"}};
}

std::vector<std::pair<std::string, std::string>> shipped_tower_files() {
    return {{"cxp2_tower.json", "cxp2"},
            {"ccc_tower.json", "ccc"},
            {"cxjac_tower.json", "cxjac"}};
}

std::string data_dir() {
    if (const char* env = std::getenv("OKBODY_DATA")) return env;
    return OKBODY_SOURCE_DATA_DIR;
}

}  // namespace okbody::jsonio
