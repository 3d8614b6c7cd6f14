// okbody: exact Newton–Okounkov body calculator for three families of
// abelian-fibered threefolds and their surface building blocks.

#include "okbody/checks.hpp"
#include "okbody/json_io.hpp"
#include "okbody/okounkov.hpp"
#include "okbody/surface.hpp"
#include "okbody/threefold.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using okbody::Rat;
using okbody::QVec;
using okbody::jsonio::json;

/// Bad command-line input: reported with a usage hint, exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rat parse_rat(const std::string& text) {
    try {
        return okbody::rat_from_string(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> out;
    std::string::size_type pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        const std::string piece = text.substr(pos, comma - pos);
        if (piece.empty()) throw UsageError("empty entry in rational list: " + text);
        out.push_back(parse_rat(piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

long thread_count() {
    const char* env = std::getenv("OKBODY_THREADS");
    if (env == nullptr) return 1;
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || n < 1) return 1;
    return n;
}

/// Routes deterministic payloads to --out or stdout.
struct Sink {
    std::string path;  // empty: stdout

    void emit(const std::string& payload) const {
        if (path.empty()) {
            std::cout << payload;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + path);
        out << payload;
    }
};

/// Shared family/degree options for the threefold subcommands.
struct FamilyArgs {
    std::string family;
    std::string a, b, s, d;

    void attach(CLI::App& cmd, bool family_only = false) {
        cmd.add_option("--family", family, "family label (cxp2, ccc, cxjac)")
            ->required();
        if (family_only) return;
        cmd.add_option("--a", a, "product factor degree a (cxp2)");
        cmd.add_option("--b", b, "product factor degree b (cxp2)");
        cmd.add_option("--s", s, "polarization parameter s (cxjac)");
        cmd.add_option("--d", d, "comma-separated degrees d1,d2,d3 (ccc)");
    }

    okbody::threefold::Tower tower() const {
        const auto labels = okbody::threefold::tower_labels();
        if (std::find(labels.begin(), labels.end(), family) == labels.end()) {
            std::string known;
            for (const auto& l : labels) known += (known.empty() ? "" : ", ") + l;
            throw UsageError("unknown family '" + family + "' (known: " + known + ")");
        }
        return okbody::threefold::tower(family);
    }

    std::map<std::string, Rat> degrees() const {
        std::map<std::string, Rat> m;
        if (family == "cxp2") {
            if (a.empty() || b.empty() || !s.empty() || !d.empty())
                throw UsageError("family cxp2 takes exactly --a and --b");
            m["a"] = parse_rat(a);
            m["b"] = parse_rat(b);
        } else if (family == "ccc") {
            if (d.empty() || !a.empty() || !b.empty() || !s.empty())
                throw UsageError("family ccc takes exactly --d d1,d2,d3");
            const auto ds = parse_rat_list(d);
            if (ds.size() != 3) throw UsageError("family ccc needs three degrees");
            m["d1"] = ds[0];
            m["d2"] = ds[1];
            m["d3"] = ds[2];
        } else if (family == "cxjac") {
            if (s.empty() || !a.empty() || !b.empty() || !d.empty())
                throw UsageError("family cxjac takes exactly --s");
            m["s"] = parse_rat(s);
        }
        return m;
    }
};

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (format == f) return;
    std::string known;
    for (const char* f : allowed) known += (known.empty() ? "" : ", ") + std::string(f);
    throw UsageError("format '" + format + "' not supported here (use " + known + ")");
}

std::string json_payload(const json& j) { return okbody::jsonio::dump(j); }

// --- subcommand bodies ------------------------------------------------------

void run_zariski(const std::string& model_label, const std::string& cls_text,
                 const std::string& format, const Sink& sink) {
    require_format(format, {"json"});
    const auto labels = okbody::surface::standard_model_labels();
    if (std::find(labels.begin(), labels.end(), model_label) == labels.end()) {
        std::string known;
        for (const auto& l : labels) known += (known.empty() ? "" : ", ") + l;
        throw UsageError("unknown surface model '" + model_label + "' (known: " + known + ")");
    }
    const auto model = okbody::surface::standard_model(model_label);
    const auto cls = parse_rat_list(cls_text);
    if (cls.size() != model.basis_names.size())
        throw UsageError("class needs " + std::to_string(model.basis_names.size()) +
                         " coordinates for model " + model_label);
    QVec v;
    for (const Rat& c : cls) v.push_back(c);
    const auto z = okbody::surface::zariski(model, {v});
    json neg = json::object();
    for (const auto& [name, coeff] : z.negative_coeffs)
        neg[name] = okbody::jsonio::rat_to_json(coeff);
    const json out = {{"model", model_label},
                      {"class", okbody::jsonio::qvec_to_json(v)},
                      {"positive", okbody::jsonio::qvec_to_json(z.positive.cls)},
                      {"negative", neg}};
    sink.emit(json_payload(out));
}

void run_volume(const FamilyArgs& fam, const std::string& t_text,
                const std::string& format, const Sink& sink) {
    require_format(format, {"text", "json"});
    if (t_text.empty()) throw UsageError("volume needs --t");
    const auto tw = fam.tower();
    auto values = fam.degrees();
    values["t"] = parse_rat(t_text);
    const Rat vol = okbody::threefold::vol_ray(tw, values);
    if (format == "json")
        sink.emit(json_payload(okbody::jsonio::rat_to_json(vol)));
    else
        sink.emit(okbody::rat_to_string(vol) + "\n");
}

void run_body(const FamilyArgs& fam, const std::string& format, const Sink& sink) {
    require_format(format, {"json", "off"});
    const auto tw = fam.tower();
    const auto b = okbody::okounkov::body(tw, fam.degrees());
    if (format == "off")
        sink.emit(okbody::jsonio::off_3d(b.vrep));
    else
        sink.emit(json_payload(okbody::jsonio::nobody_to_json(b)));
}

void run_slice(const FamilyArgs& fam, const std::string& t_text, long samples,
               const std::string& format, const Sink& sink) {
    const auto tw = fam.tower();
    const auto degrees = fam.degrees();
    if (!t_text.empty() && samples > 0)
        throw UsageError("give either --t (single slice) or --samples (sweep)");
    if (!t_text.empty()) {
        require_format(format.empty() ? "json" : format, {"json"});
        auto values = degrees;
        values["t"] = parse_rat(t_text);
        sink.emit(json_payload(
            okbody::jsonio::slice_to_json(okbody::okounkov::slice_at(tw, values))));
        return;
    }
    if (samples <= 0)
        throw UsageError("give either --t (single slice) or --samples (sweep)");
    require_format(format.empty() ? "csv" : format, {"csv"});
    const Rat mu = okbody::pwl::eval(tw.mu, degrees);
    const auto b = okbody::okounkov::body(tw, degrees);
    std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(samples) + 1);
    const long threads = thread_count();
    auto fill = [&](long first) {
        for (long k = first; k <= samples; k += threads) {
            const Rat tk = mu * k / samples;
            const auto section = okbody::ratgeom::slice_poly(b.vrep, 0, tk);
            const Rat area = okbody::ratgeom::volume(section);
            rows[static_cast<std::size_t>(k)] = {tk, area};
        }
    };
    if (threads == 1) {
        fill(0);
    } else {
        std::vector<std::future<void>> futs;
        for (long c = 0; c < threads; ++c)
            futs.push_back(std::async(std::launch::async, fill, c));
        for (auto& f : futs) f.get();
    }
    sink.emit(okbody::jsonio::csv_table({"t", "area"}, rows));
}

void run_glue(const FamilyArgs& fam, const std::string& format, const Sink& sink) {
    require_format(format, {"json"});
    if (fam.family != "cxp2" && fam.family != "cxjac")
        throw UsageError("glue is defined for the one-parameter families cxp2 and cxjac");
    const auto tw = fam.tower();
    sink.emit(json_payload(okbody::jsonio::nobody_to_json(okbody::okounkov::glue4d(tw))));
}

void run_cone(const FamilyArgs& fam, const std::string& which,
              const std::string& format, const Sink& sink) {
    require_format(format, {"json"});
    const auto tw = fam.tower();
    const okbody::threefold::ConeInfo* info = nullptr;
    if (which == "eff") {
        info = &tw.stage1_eff;
    } else if (which == "nef") {
        if (!tw.stage1_nef)
            throw UsageError("family " + fam.family + " records no stage-one nef cone");
        info = &*tw.stage1_nef;
    } else if (which == "mov") {
        if (!tw.stage1_mov)
            throw UsageError("family " + fam.family + " records no stage-one movable cone");
        info = &*tw.stage1_mov;
    } else {
        throw UsageError("--which must be one of eff, nef, mov");
    }
    json gens = json::array();
    for (const QVec& g : info->gens) gens.push_back(okbody::jsonio::qvec_to_json(g));
    const json out = {{"family", fam.family},
                      {"cone", which},
                      {"names", info->names},
                      {"generators", gens}};
    sink.emit(json_payload(out));
}

void run_seshadri(const FamilyArgs& fam, const std::string& format, const Sink& sink) {
    require_format(format, {"text", "json"});
    const auto tw = fam.tower();
    const auto degrees = fam.degrees();
    const Rat bound = okbody::okounkov::seshadri_curve(tw, degrees);
    if (format == "text") {
        sink.emit(okbody::rat_to_string(bound) + "\n");
        return;
    }
    const auto pc = okbody::okounkov::projection_area_check(tw, degrees);
    const json out = {{"bound", okbody::jsonio::rat_to_json(bound)},
                      {"projection",
                       {{"lhs", okbody::jsonio::rat_to_json(pc.lhs)},
                        {"rhs", okbody::jsonio::rat_to_json(pc.rhs)},
                        {"equality", pc.equality}}}};
    sink.emit(json_payload(out));
}

int run_check(const std::string& tier, const Sink& sink) {
    const auto known = okbody::checks::tiers();
    if (tier != "all" && std::find(known.begin(), known.end(), tier) == known.end())
        throw UsageError("unknown check tier '" + tier + "'");
    const auto results = okbody::checks::run(tier);
    sink.emit(okbody::checks::report(results));
    return okbody::checks::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Newton-Okounkov body calculator"};
    app.require_subcommand(1);

    int rc = 0;
    std::string format;
    Sink sink;
    auto add_io_options = [&](CLI::App& cmd) {
        cmd.add_option("--format", format, "output format (json, off, csv, text)");
        cmd.add_option("--out", sink.path, "write output to this file instead of stdout");
    };

    // zariski
    auto* zariski = app.add_subcommand(
        "zariski", "Zariski-decompose a divisor class on a surface model");
    std::string model_label, cls_text;
    zariski->add_option("--model", model_label, "surface model label")->required();
    zariski->add_option("--class", cls_text, "comma-separated class coordinates")
        ->required();
    add_io_options(*zariski);
    zariski->callback([&] {
        run_zariski(model_label, cls_text, format.empty() ? "json" : format, sink);
    });

    // volume
    auto* volume = app.add_subcommand(
        "volume", "volume of the polarization minus t times the sweep class");
    FamilyArgs vol_fam;
    vol_fam.attach(*volume);
    std::string vol_t;
    volume->add_option("--t", vol_t, "sweep parameter t")->required();
    add_io_options(*volume);
    volume->callback([&] {
        run_volume(vol_fam, vol_t, format.empty() ? "text" : format, sink);
    });

    // body
    auto* body = app.add_subcommand("body", "three-dimensional body of a polarization");
    FamilyArgs body_fam;
    body_fam.attach(*body);
    add_io_options(*body);
    body->callback([&] { run_body(body_fam, format.empty() ? "json" : format, sink); });

    // slice
    auto* slice = app.add_subcommand(
        "slice", "planar sections of the body: one slice or a (t, area) sweep");
    FamilyArgs slice_fam;
    slice_fam.attach(*slice);
    std::string slice_t;
    long samples = 0;
    slice->add_option("--t", slice_t, "height of a single slice");
    slice->add_option("--samples", samples, "number of sweep steps over [0, mu]");
    add_io_options(*slice);
    slice->callback([&] { run_slice(slice_fam, slice_t, samples, format, sink); });

    // glue
    auto* glue = app.add_subcommand(
        "glue", "four-dimensional body glued from a one-parameter family");
    FamilyArgs glue_fam;
    glue_fam.attach(*glue, /*family_only=*/true);
    add_io_options(*glue);
    glue->callback([&] { run_glue(glue_fam, format.empty() ? "json" : format, sink); });

    // cone
    auto* cone = app.add_subcommand("cone", "stage-one cone generators of a family");
    FamilyArgs cone_fam;
    cone_fam.attach(*cone, /*family_only=*/true);
    std::string which = "eff";
    cone->add_option("--which", which, "cone to print: eff, nef, or mov");
    add_io_options(*cone);
    cone->callback([&] {
        run_cone(cone_fam, which, format.empty() ? "json" : format, sink);
    });

    // seshadri
    auto* seshadri = app.add_subcommand(
        "seshadri", "lower bound on the Seshadri constant along the section curve");
    FamilyArgs sesh_fam;
    sesh_fam.attach(*seshadri);
    add_io_options(*seshadri);
    seshadri->callback([&] {
        run_seshadri(sesh_fam, format.empty() ? "text" : format, sink);
    });

    // check
    auto* check = app.add_subcommand("check", "run the self-check suite");
    std::string tier = "all";
    check->add_option("--tier", tier,
                      "kernel, surfaces, threefolds, paper, or all (default)");
    add_io_options(*check);
    check->callback([&] { rc = run_check(tier, sink); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "run '" << (argc > 0 ? argv[0] : "okbody")
                  << " --help' for usage\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
