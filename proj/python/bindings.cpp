// Python bindings for the okbody core. Rationals cross the boundary as exact
// "p/q" strings; structured payloads cross as the canonical JSON text so the
// schema stays identical to the command-line output.

#include "okbody/checks.hpp"
#include "okbody/json_io.hpp"
#include "okbody/okounkov.hpp"
#include "okbody/surface.hpp"
#include "okbody/threefold.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

namespace py = pybind11;

namespace {

using okbody::QVec;
using okbody::Rat;

Rat to_rat(const std::string& s) { return okbody::rat_from_string(s); }

std::string from_rat(const Rat& r) { return okbody::rat_to_string(r); }

QVec to_qvec(const std::vector<std::string>& v) {
    QVec out;
    for (const auto& s : v) out.push_back(to_rat(s));
    return out;
}

std::vector<std::string> from_qvec(const QVec& v) {
    std::vector<std::string> out;
    for (const Rat& r : v) out.push_back(from_rat(r));
    return out;
}

std::map<std::string, Rat> to_rat_map(const std::map<std::string, std::string>& m) {
    std::map<std::string, Rat> out;
    for (const auto& [k, v] : m) out[k] = to_rat(v);
    return out;
}

std::map<std::string, std::string> from_rat_map(const std::map<std::string, Rat>& m) {
    std::map<std::string, std::string> out;
    for (const auto& [k, v] : m) out[k] = from_rat(v);
    return out;
}

std::string dump(const okbody::jsonio::json& j) { return okbody::jsonio::dump(j); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Newton-Okounkov body calculator (core bindings)";

    m.def("tower_labels", &okbody::threefold::tower_labels,
          "labels of the built-in threefold families");
    m.def("surface_model_labels", &okbody::surface::standard_model_labels,
          "labels of the built-in surface models");

    m.def(
        "surface_basis",
        [](const std::string& label) {
            return okbody::surface::standard_model(label).basis_names;
        },
        py::arg("model"), "divisor-class basis names of a surface model");

    m.def(
        "zariski",
        [](const std::string& label, const std::vector<std::string>& cls) {
            const auto model = okbody::surface::standard_model(label);
            const auto z = okbody::surface::zariski(model, {to_qvec(cls)});
            py::dict out;
            out["positive"] = from_qvec(z.positive.cls);
            out["negative"] = from_rat_map(z.negative_coeffs);
            return out;
        },
        py::arg("model"), py::arg("cls"),
        "Zariski decomposition of a divisor class on a surface model");

    m.def(
        "nobody_surface",
        [](const std::string& label, const std::vector<std::string>& cls,
           const std::vector<std::string>& flag, bool infinitesimal) {
            const auto model = okbody::surface::standard_model(label);
            const auto poly = okbody::surface::nobody_surface(
                model, {to_qvec(cls)}, to_qvec(flag), infinitesimal);
            std::vector<std::vector<std::string>> verts;
            for (const QVec& v : poly.vertices) verts.push_back(from_qvec(v));
            return verts;
        },
        py::arg("model"), py::arg("cls"), py::arg("flag"),
        py::arg("infinitesimal") = true,
        "vertices of the two-dimensional body of a big class on a surface");

    m.def(
        "vol_ray",
        [](const std::string& family, const std::map<std::string, std::string>& values) {
            return from_rat(
                okbody::threefold::vol_ray(okbody::threefold::tower(family),
                                           to_rat_map(values)));
        },
        py::arg("family"), py::arg("values"),
        "volume of the polarization minus t times the sweep class");

    m.def(
        "psigma",
        [](const std::string& family, const std::map<std::string, std::string>& values) {
            const auto d = okbody::threefold::psigma(okbody::threefold::tower(family),
                                                     to_rat_map(values));
            py::dict out;
            out["positive"] = from_rat_map(d.positive_coeffs);
            out["negative"] = from_rat_map(d.negative_coeffs);
            return out;
        },
        py::arg("family"), py::arg("values"),
        "divisorial decomposition coefficients along the sweep ray");

    m.def(
        "body_json",
        [](const std::string& family, const std::map<std::string, std::string>& degrees) {
            return dump(okbody::jsonio::nobody_to_json(okbody::okounkov::body(
                okbody::threefold::tower(family), to_rat_map(degrees))));
        },
        py::arg("family"), py::arg("degrees"),
        "three-dimensional body as canonical JSON text");

    m.def(
        "body_off",
        [](const std::string& family, const std::map<std::string, std::string>& degrees) {
            return okbody::jsonio::off_3d(
                okbody::okounkov::body(okbody::threefold::tower(family),
                                       to_rat_map(degrees))
                    .vrep);
        },
        py::arg("family"), py::arg("degrees"),
        "three-dimensional body as OFF mesh text");

    m.def(
        "glue_json",
        [](const std::string& family) {
            return dump(okbody::jsonio::nobody_to_json(
                okbody::okounkov::glue4d(okbody::threefold::tower(family))));
        },
        py::arg("family"),
        "four-dimensional glued body of a one-parameter family as JSON text");

    m.def(
        "slice_json",
        [](const std::string& family, const std::map<std::string, std::string>& values) {
            return dump(okbody::jsonio::slice_to_json(okbody::okounkov::slice_at(
                okbody::threefold::tower(family), to_rat_map(values))));
        },
        py::arg("family"), py::arg("values"),
        "planar slice of the body at height t as JSON text");

    m.def(
        "seshadri_curve",
        [](const std::string& family, const std::map<std::string, std::string>& degrees) {
            return from_rat(okbody::okounkov::seshadri_curve(
                okbody::threefold::tower(family), to_rat_map(degrees)));
        },
        py::arg("family"), py::arg("degrees"),
        "lower bound on the Seshadri constant along the section curve");

    m.def(
        "projection_check",
        [](const std::string& family, const std::map<std::string, std::string>& degrees) {
            const auto pc = okbody::okounkov::projection_area_check(
                okbody::threefold::tower(family), to_rat_map(degrees));
            py::dict out;
            out["lhs"] = from_rat(pc.lhs);
            out["rhs"] = from_rat(pc.rhs);
            out["equality"] = pc.equality;
            return out;
        },
        py::arg("family"), py::arg("degrees"),
        "compare the projected body area against the Seshadri-derived bound");

    m.def(
        "tower_json",
        [](const std::string& family) {
            return dump(
                okbody::jsonio::tower_to_json(okbody::threefold::tower(family)));
        },
        py::arg("family"), "full family description as canonical JSON text");

    m.def(
        "surface_model_json",
        [](const std::string& label) {
            return dump(okbody::jsonio::surface_model_to_json(
                okbody::surface::standard_model(label)));
        },
        py::arg("model"), "full surface model description as canonical JSON text");

    m.def(
        "run_checks",
        [](const std::string& tier) {
            const auto results = okbody::checks::run(tier);
            return py::make_tuple(okbody::checks::all_passed(results),
                                  okbody::checks::report(results));
        },
        py::arg("tier") = "all",
        "run the self-check suite; returns (passed, report)");
}
