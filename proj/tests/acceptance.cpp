// Acceptance gate: runs the named self-checks in criterion bundles, enforces
// wall-time budgets, and prints one verdict line per criterion.

#include "okbody/checks.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

namespace {

struct Criterion {
    std::string label;
    double limit_seconds;
    bool limit_per_check;  // true: each check must fit the budget on its own
    std::vector<std::string> checks;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"surface sweep polygons match the golden vertex lists", 1.0, true,
         {"product sweep polygons", "diagonal sweep polygons", "jacobian sweep triangle"}},
        {"surface zariski matches the closed forms at random sweep points", 5.0, false,
         {"zariski closed form: fiber product", "zariski closed form: diagonal polarization",
          "zariski closed form: jacobian theta sweep"}},
        {"symmetric blowup nefness system, dual cones, and intersection table", 10.0, false,
         {"symmetric blowup nefness system", "symmetric blowup dual cones",
          "symmetric blowup intersection table"}},
        {"ray volumes match the closed forms and spot values", 30.0, false,
         {"ray volume closed form: product times line", "ray volume closed form: triple product",
          "ray volume closed form: jacobian family", "triple product piecewise volumes",
          "jacobian family volume at the sweep start"}},
        {"positive parts are nef across the full sweep range", 60.0, false,
         {"positive parts stay nef across the sweep"}},
        {"three-dimensional bodies match the golden vertex lists and volumes", 30.0, false,
         {"product family body vertices", "triple product body vertices",
          "jacobian family body vertices", "equal-degree body degeneration"}},
        {"truncated body volumes and slices match the ray data", 60.0, false,
         {"slice and volume bridge to the body"}},
        {"four-dimensional glued bodies match the golden data", 30.0, false,
         {"glued four-dimensional bodies", "glue slices match the degree bodies"}},
        {"seshadri bounds and projected-area comparisons", 10.0, false,
         {"seshadri bounds at random parameters", "seshadri constants and projected areas"}},
        {"exact geometry kernel property suite", 60.0, false,
         {"polytope representation round trips", "cone duality involution",
          "volume additivity under hyperplane splits", "sweep ledger branch certificates"}},
    };

    bool all_ok = true;
    std::size_t index = 0;
    for (const Criterion& c : criteria) {
        ++index;
        bool ok = true;
        std::string why;
        double worst_check = 0.0;
        const auto t0 = std::chrono::steady_clock::now();
        for (const std::string& name : c.checks) {
            const auto c0 = std::chrono::steady_clock::now();
            const auto r = okbody::checks::run_one(name);
            const double dt = seconds_since(c0);
            if (dt > worst_check) worst_check = dt;
            if (!r.pass && why.empty()) {
                ok = false;
                why = name + ": " + r.detail;
            }
            if (c.limit_per_check && dt > c.limit_seconds && why.empty()) {
                ok = false;
                why = name + ": took " + std::to_string(dt) + "s, budget " +
                      std::to_string(c.limit_seconds) + "s";
            }
        }
        const double total = seconds_since(t0);
        if (!c.limit_per_check && total > c.limit_seconds && ok) {
            ok = false;
            why = "bundle took " + std::to_string(total) + "s, budget " +
                  std::to_string(c.limit_seconds) + "s";
        }
        const double shown = c.limit_per_check ? worst_check : total;
        std::printf("%s  %2zu/%zu  %s  [%.2fs, budget %.0fs%s]\n", ok ? "PASS" : "FAIL",
                    index, criteria.size(), c.label.c_str(), shown, c.limit_seconds,
                    c.limit_per_check ? " per check" : "");
        if (!ok) {
            std::printf("      %s\n", why.c_str());
            all_ok = false;
        }
    }
    return all_ok ? 0 : 1;
}
