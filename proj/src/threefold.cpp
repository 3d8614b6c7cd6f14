#include "okbody/threefold.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace okbody::threefold {

TripleForm::TripleForm(std::vector<std::string> basis_names)
    : names_(std::move(basis_names)), coeffs_(names_.size() * names_.size() * names_.size(), Rat(0)) {}

void TripleForm::set(std::size_t i, std::size_t j, std::size_t k, const Rat& value) {
    const std::size_t n = dim();
    if (i >= n || j >= n || k >= n) throw std::out_of_range("TripleForm::set");
    const std::size_t perms[6][3] = {{i, j, k}, {i, k, j}, {j, i, k},
                                     {j, k, i}, {k, i, j}, {k, j, i}};
    for (const auto& p : perms) coeffs_[(p[0] * n + p[1]) * n + p[2]] = value;
}

Rat TripleForm::coefficient(std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t n = dim();
    if (i >= n || j >= n || k >= n) throw std::out_of_range("TripleForm::coefficient");
    return coeffs_[(i * n + j) * n + k];
}

Rat TripleForm::eval(const QVec& a, const QVec& b, const QVec& c) const {
    const std::size_t n = dim();
    if (a.size() != n || b.size() != n || c.size() != n)
        throw std::invalid_argument("TripleForm::eval: dimension mismatch");
    Rat out(0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            Rat inner(0);
            for (std::size_t k = 0; k < n; ++k)
                if (c[k] != 0) inner += coeffs_[(i * n + j) * n + k] * c[k];
            out += a[i] * b[j] * inner;
        }
    }
    return out;
}

TripleForm TripleForm::extended(const std::string& name) const {
    const std::size_t n = dim();
    std::vector<std::string> names = names_;
    names.push_back(name);
    TripleForm out(std::move(names));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                out.coeffs_[(i * (n + 1) + j) * (n + 1) + k] = coeffs_[(i * n + j) * n + k];
    return out;
}

namespace {

using pwl::AffineForm;
using pwl::PwlExpr;

Rat q(long n, long d = 1) { return make_rat(n, d); }

QVec qv(std::initializer_list<long> xs) {
    QVec v;
    v.reserve(xs.size());
    for (long x : xs) v.push_back(Rat(x));
    return v;
}

AffineForm lin(std::initializer_list<std::pair<const char*, Rat>> terms, Rat c = Rat(0)) {
    AffineForm f = pwl::af_const(c);
    for (const auto& [name, coeff] : terms)
        f = pwl::af_add(f, pwl::af_var(name, coeff));
    return f;
}

PwlExpr A(AffineForm f) { return PwlExpr::affine(std::move(f)); }
PwlExpr mn(PwlExpr a, PwlExpr b) { return PwlExpr::min({std::move(a), std::move(b)}); }
PwlExpr plus(PwlExpr a, PwlExpr b) { return PwlExpr::sum({std::move(a), std::move(b)}); }
PwlExpr minus(PwlExpr a, PwlExpr b) {
    return PwlExpr::sum({std::move(a), PwlExpr::scale(Rat(-1), std::move(b))});
}

void push_point(Tower& tw, const std::string& name) {
    const std::size_t n = tw.form.dim();
    tw.form = tw.form.extended(name);
    tw.form.set(n, n, n, Rat(1));
    TowerStage st;
    st.name = name;
    st.point = true;
    tw.stages.push_back(std::move(st));
}

void push_curve(Tower& tw, const std::string& name, const QVec& center_degrees,
                const Rat& delta1, const Rat& delta2) {
    const std::size_t n = tw.form.dim();
    if (center_degrees.size() != n)
        throw std::invalid_argument("push_curve: center degree count mismatch");
    tw.form = tw.form.extended(name);
    for (std::size_t i = 0; i < n; ++i)
        tw.form.set(i, n, n, -center_degrees[i]);
    tw.form.set(n, n, n, delta1 + delta2);
    TowerStage st;
    st.name = name;
    st.center_degrees = center_degrees;
    st.delta1 = delta1;
    st.delta2 = delta2;
    tw.stages.push_back(std::move(st));
}

/// Solves for the restriction matrix given the images of a full set of
/// linearly independent classes (rows of `classes`).
QMat restriction_from_images(const QMat& classes, const std::vector<QVec>& images,
                             std::size_t model_dim) {
    QMat rhs_cols(model_dim);
    for (std::size_t r = 0; r < model_dim; ++r)
        for (const auto& img : images) rhs_cols[r].push_back(img[r]);
    const auto rows = solve_many(classes, rhs_cols);
    if (!rows) throw std::logic_error("restriction_from_images: singular class matrix");
    return *rows;
}

Tower tower_cxp2() {
    Tower tw;
    tw.label = "cxp2";
    tw.params = {"a", "b", "t"};
    tw.base_rank = 2;
    tw.form = TripleForm({"F", "H"});
    tw.form.set(0, 1, 1, Rat(1));
    push_point(tw, "E");
    push_curve(tw, "G", qv({1, 0, 1}), Rat(1), Rat(1));

    auto add_comp = [&](const std::string& name, QVec cls, surface::SurfaceModel model,
                        QMat restriction) {
        Component c;
        c.name = name;
        c.cls = std::move(cls);
        c.model = std::move(model);
        c.restriction = std::move(restriction);
        tw.components.push_back(std::move(c));
    };
    // columns (F, H, E, G)
    add_comp("Ftilde", qv({1, 0, -1, 0}), surface::standard_model("p2_blow_1"),
             {qv({0, 1, 0, 0}), qv({0, 0, 1, 0})});
    add_comp("Htilde", qv({0, 1, -1, -1}), surface::standard_model("two_curves"),
             {qv({1, 0, 0, 0}), qv({0, 1, 0, 1}), qv({0, 0, 1, -1})});
    add_comp("Etilde", qv({0, 0, 1, 0}), surface::standard_model("p2_blow_1"),
             {qv({0, 0, -1, 0}), qv({0, 0, 0, 1})});
    add_comp("G", qv({0, 0, 0, 1}), surface::standard_model("ruled(base,1,1)"),
             {qv({0, 0, 0, -1}), qv({1, 0, 1, 0})});

    tw.ray_class = {lin({{"a", Rat(1)}}), lin({{"b", Rat(1)}}),
                    lin({{"t", Rat(-1)}}), pwl::af_const(Rat(0))};

    const PwlExpr a = A(lin({{"a", Rat(1)}}));
    const PwlExpr b = A(lin({{"b", Rat(1)}}));
    const PwlExpr tau = A(lin({{"a", Rat(1)}, {"b", Rat(1)}, {"t", Rat(-1)}}));
    tw.positive_ledger = {{"Ftilde", mn(a, tau)},
                          {"Htilde", b},
                          {"Etilde", tau},
                          {"G", mn(b, tau)}};
    tw.negative_ledger = {{"Ftilde", PwlExpr::pos(A(lin({{"t", Rat(1)}, {"b", Rat(-1)}})))},
                          {"G", PwlExpr::pos(A(lin({{"t", Rat(1)}, {"a", Rat(-1)}})))}};

    tw.mu = A(lin({{"a", Rat(1)}, {"b", Rat(1)}}));
    tw.thresholds = {{"nef", mn(a, b)}, {"mov", b}};

    tw.stage1_eff = {{"fbar", "Hbar", "E"},
                     {qv({1, 0, -1}), qv({0, 1, -1}), qv({0, 0, 1})}};
    tw.stage1_mov = ConeInfo{{"F", "H", "Hbar"},
                             {qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 1, -1})}};
    tw.stage1_nef = ConeInfo{{"F", "H", "F+H-E"},
                             {qv({1, 0, 0}), qv({0, 1, 0}), qv({1, 1, -1})}};

    tw.body_coords = {"t", "x", "y"};
    tw.body_rows = {lin({{"t", Rat(1)}}),
                    lin({{"x", Rat(1)}}),
                    lin({{"t", Rat(1)}, {"x", Rat(-1)}}),
                    lin({{"a", Rat(1)}, {"x", Rat(-1)}}),
                    lin({{"b", Rat(1)}, {"x", Rat(-1)}}),
                    lin({{"a", Rat(1)}, {"b", Rat(1)}, {"t", Rat(-1)}, {"x", Rat(-1)}}),
                    lin({{"y", Rat(1)}}),
                    lin({{"t", Rat(1)}, {"x", Rat(-1)}, {"y", Rat(-1)}}),
                    lin({{"b", Rat(1)}, {"x", Rat(-1)}, {"y", Rat(-1)}})};
    return tw;
}

Tower tower_ccc() {
    Tower tw;
    tw.label = "ccc";
    tw.params = {"d1", "d2", "d3", "t"};
    tw.base_rank = 3;
    tw.form = TripleForm({"F1", "F2", "F3"});
    tw.form.set(0, 1, 2, Rat(1));
    push_point(tw, "E");
    push_curve(tw, "E1", qv({1, 0, 0, 1}), Rat(1), Rat(1));
    push_curve(tw, "E2", qv({0, 1, 0, 1, 0}), Rat(1), Rat(1));
    push_curve(tw, "E3", qv({0, 0, 1, 1, 0, 0}), Rat(1), Rat(1));

    auto add_comp = [&](const std::string& name, QVec cls, surface::SurfaceModel model,
                        QMat restriction) {
        Component c;
        c.name = name;
        c.cls = std::move(cls);
        c.model = std::move(model);
        c.restriction = std::move(restriction);
        tw.components.push_back(std::move(c));
    };
    // columns (F1, F2, F3, E, E1, E2, E3)
    add_comp("F1tilde", qv({1, 0, 0, -1, 0, -1, -1}), surface::standard_model("two_curves"),
             {qv({0, 1, 0, 0, 0, 0, 1}), qv({0, 0, 1, 0, 0, 1, 0}),
              qv({0, 0, 0, 1, 0, -1, -1})});
    add_comp("F2tilde", qv({0, 1, 0, -1, -1, 0, -1}), surface::standard_model("two_curves"),
             {qv({1, 0, 0, 0, 0, 0, 1}), qv({0, 0, 1, 0, 1, 0, 0}),
              qv({0, 0, 0, 1, -1, 0, -1})});
    add_comp("F3tilde", qv({0, 0, 1, -1, -1, -1, 0}), surface::standard_model("two_curves"),
             {qv({1, 0, 0, 0, 0, 1, 0}), qv({0, 1, 0, 0, 1, 0, 0}),
              qv({0, 0, 0, 1, -1, -1, 0})});
    add_comp("Etilde", qv({0, 0, 0, 1, 0, 0, 0}),
             surface::standard_model("p2_blow_3_cremona"),
             {qv({0, 0, 0, -1, 0, 0, 0}), qv({0, 0, 0, 0, 1, 0, 0}),
              qv({0, 0, 0, 0, 0, 1, 0}), qv({0, 0, 0, 0, 0, 0, 1})});
    add_comp("E1", qv({0, 0, 0, 0, 1, 0, 0}), surface::standard_model("ruled(base,1,1)"),
             {qv({0, 0, 0, 0, -1, 0, 0}), qv({1, 0, 0, 1, 0, 0, 0})});
    add_comp("E2", qv({0, 0, 0, 0, 0, 1, 0}), surface::standard_model("ruled(base,1,1)"),
             {qv({0, 0, 0, 0, 0, -1, 0}), qv({0, 1, 0, 1, 0, 0, 0})});
    add_comp("E3", qv({0, 0, 0, 0, 0, 0, 1}), surface::standard_model("ruled(base,1,1)"),
             {qv({0, 0, 0, 0, 0, 0, -1}), qv({0, 0, 1, 1, 0, 0, 0})});

    tw.ray_class = {lin({{"d1", Rat(1)}}), lin({{"d2", Rat(1)}}), lin({{"d3", Rat(1)}}),
                    lin({{"t", Rat(-1)}}), pwl::af_const(Rat(0)),
                    pwl::af_const(Rat(0)), pwl::af_const(Rat(0))};

    const PwlExpr tau =
        A(lin({{"d1", Rat(1)}, {"d2", Rat(1)}, {"d3", Rat(1)}, {"t", Rat(-1)}}));
    const PwlExpr d[3] = {A(lin({{"d1", Rat(1)}})), A(lin({{"d2", Rat(1)}})),
                          A(lin({{"d3", Rat(1)}}))};
    PwlExpr n[3] = {mn(d[0], tau), mn(d[1], tau), mn(d[2], tau)};
    PwlExpr m[3];
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        m[i] = mn(plus(n[j], n[k]), tau);
    }
    tw.positive_ledger = {{"F1tilde", n[0]}, {"F2tilde", n[1]}, {"F3tilde", n[2]},
                          {"Etilde", tau},   {"E1", m[0]},      {"E2", m[1]},
                          {"E3", m[2]}};
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        const std::string fi = "F" + std::to_string(i + 1) + "tilde";
        tw.negative_ledger[fi] = PwlExpr::pos(minus(d[i], tau));
        tw.negative_ledger["E" + std::to_string(i + 1)] = minus(plus(d[j], d[k]), m[i]);
    }

    tw.mu = A(lin({{"d1", Rat(1)}, {"d2", Rat(1)}, {"d3", Rat(1)}}));

    tw.stage1_eff = {{"f1bar", "f2bar", "f3bar", "E"},
                     {qv({1, 0, 0, -1}), qv({0, 1, 0, -1}), qv({0, 0, 1, -1}),
                      qv({0, 0, 0, 1})}};

    // No global affine facet rows: the branch breakpoints move piecewise
    // linearly with t, so the body is assembled from the ledger per branch.
    tw.body_coords = {"t", "x", "y"};
    return tw;
}

Tower tower_cxjac() {
    Tower tw;
    tw.label = "cxjac";
    tw.params = {"s", "t"};
    tw.base_rank = 2;
    tw.form = TripleForm({"f", "theta"});
    tw.form.set(0, 1, 1, Rat(2));
    push_point(tw, "E");
    push_curve(tw, "FR", qv({0, 8, 6}), Rat(4), Rat(6));
    push_curve(tw, "FC", qv({1, 0, 1, 0}), Rat(1), Rat(1));
    push_curve(tw, "G", {Rat(0), Rat(8), Rat(6), Rat(-4), Rat(0)}, Rat(2), Rat(4));
    push_curve(tw, "N", {Rat(0), Rat(8), Rat(6), Rat(-4), Rat(0), Rat(-2)}, Rat(2), Rat(2));

    // Strict transforms over the basis (f, theta, E, FR, FC, G, N).
    const QMat strict = {qv({1, 0, -1, -1, 0, -1, 0}),   // J
                         qv({0, 4, -6, -1, -6, 0, 0}),   // Y
                         qv({0, 0, 1, 0, 0, 0, 0}),      // E
                         qv({0, 0, 0, 1, 0, -1, -1}),    // FR
                         qv({0, 0, 0, 0, 1, 0, 0}),      // FC
                         qv({0, 0, 0, 0, 0, 1, -1}),     // G
                         qv({0, 0, 0, 0, 0, 0, 1})};     // N

    auto add_comp = [&](const std::string& name, const QVec& cls,
                        surface::SurfaceModel model, const std::vector<QVec>& images) {
        Component c;
        c.name = name;
        c.cls = cls;
        c.restriction = restriction_from_images(strict, images, model.dim());
        c.model = std::move(model);
        tw.components.push_back(std::move(c));
    };
    const QVec z0_2 = qv({0, 0});
    add_comp("Jcheck", strict[0], surface::standard_model("genus2_jacobian"),
             {qv({-8, 11}), z0_2, qv({0, 1}), z0_2, z0_2, qv({4, -6}), z0_2});
    const QVec z0_8 = qvec_zero(8);
    add_comp("Ycheck", strict[1], surface::standard_model("z_model"),
             {z0_8, qv({-1, -4, 1, 1, 1, 1, 1, 1}), qv({0, 0, 1, 1, 1, 1, 1, 1}),
              qv({1, 0, -1, -1, -1, -1, -1, -1}), qv({0, 6, -1, -1, -1, -1, -1, -1}),
              z0_8, z0_8});
    const QVec z0_5 = qvec_zero(5);
    add_comp("Echeck", strict[2], surface::standard_model("p2blow7_symmetric"),
             {qv({1, 0, 0, 0, 0}), qv({6, 5, -6, 11, 16}), qv({-1, -1, 0, -2, -3}),
              qv({0, 1, 0, 0, 0}), qv({0, 0, 1, 0, 0}), qv({0, 0, 0, 1, 0}),
              qv({0, 0, 0, 0, 1})});
    add_comp("FRcheck", strict[3], surface::standard_model("ruled(genus2,6,4)"),
             {z0_2, qv({1, -4}), qv({0, 6}), qv({-3, 12}), z0_2, z0_2, qv({1, -6})});
    add_comp("FCcheck", strict[4], surface::standard_model("ruled(genus2,1,1)"),
             {z0_2, qv({6, -6}), qv({0, 1}), z0_2, qv({-1, 0}), z0_2, z0_2});
    add_comp("Gcheck", strict[5], surface::standard_model("ruled(genus2,4,2)"),
             {qv({1, -2}), z0_2, qv({0, 6}), z0_2, z0_2, qv({-2, 4}), qv({1, -4})});
    add_comp("Ncheck", strict[6], surface::standard_model("ruled(genus2,2,2)"),
             {z0_2, z0_2, qv({0, 6}), qv({1, -2}), z0_2, qv({1, -2}), qv({-1, 0})});

    tw.ray_class = {lin({{"s", Rat(-1)}}, Rat(1)), lin({{"s", Rat(1)}}),
                    lin({{"t", Rat(-1)}}), pwl::af_const(Rat(0)),
                    pwl::af_const(Rat(0)), pwl::af_const(Rat(0)),
                    pwl::af_const(Rat(0))};

    const PwlExpr e = A(lin({{"s", q(1, 2)}, {"t", Rat(-1)}}, Rat(1)));
    const PwlExpr j = mn(A(lin({{"s", Rat(-1)}}, Rat(1))), e);
    const PwlExpr y = PwlExpr::scale(q(3, 2), mn(A(lin({{"s", q(1, 6)}})), e));
    const PwlExpr r = mn(plus(j, y), plus(PwlExpr::scale(q(1, 3), y), e));
    const PwlExpr c = mn(PwlExpr::scale(Rat(6), y), e);
    const PwlExpr g = mn(plus(j, r), plus(PwlExpr::scale(q(1, 2), j), PwlExpr::scale(q(3, 2), e)));
    const PwlExpr n = mn(plus(r, g), PwlExpr::scale(Rat(3), e));
    tw.positive_ledger = {{"Jcheck", j},  {"Ycheck", y}, {"Echeck", e}, {"FRcheck", r},
                          {"FCcheck", c}, {"Gcheck", g}, {"Ncheck", n}};
    tw.negative_ledger = {
        {"Jcheck", minus(A(lin({{"s", Rat(-1)}}, Rat(1))), j)},
        {"Ycheck", minus(A(lin({{"s", q(1, 4)}})), y)},
        {"FRcheck", minus(A(lin({{"s", q(-3, 4)}}, Rat(1))), r)},
        {"FCcheck", minus(A(lin({{"s", q(3, 2)}})), c)},
        {"Gcheck", minus(A(lin({{"s", q(-7, 4)}}, Rat(2))), g)},
        {"Ncheck", minus(A(lin({{"s", q(-5, 2)}}, Rat(3))), n)}};

    tw.mu = A(lin({{"s", q(1, 2)}}, Rat(1)));
    tw.thresholds = {{"nef", mn(A(lin({{"s", q(4, 3)}})), A(lin({{"s", Rat(-1)}}, Rat(1))))},
                     {"mov", mn(A(lin({{"s", q(3, 2)}})), A(lin({{"s", q(1, 3)}}, Rat(1))))}};

    tw.stage1_eff = {{"Jbar", "Ybar", "E"},
                     {qv({1, 0, -1}), qv({0, 4, -6}), qv({0, 0, 1})}};
    tw.stage1_nef = ConeInfo{{"f", "theta", "4f+3theta-4E"},
                             {qv({1, 0, 0}), qv({0, 1, 0}), qv({4, 3, -4})}};
    tw.stage1_mov = ConeInfo{{"f", "theta", "3theta-4E", "f+6theta-9E"},
                             {qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 3, -4}),
                              qv({1, 6, -9})}};

    tw.body_coords = {"t", "x", "z"};
    tw.body_rows = {lin({{"x", Rat(1)}}),
                    lin({{"s", Rat(-1)}, {"x", Rat(-1)}}, Rat(1)),
                    lin({{"z", Rat(1)}}),
                    lin({{"t", Rat(1)}}),
                    lin({{"s", q(9, 2)}, {"t", Rat(-9)}, {"x", q(-81, 8)}, {"z", Rat(-1)}},
                        Rat(9)),
                    lin({{"s", q(3, 2)}, {"x", q(-9, 8)}, {"z", Rat(-1)}}),
                    lin({{"t", Rat(1)}, {"x", Rat(-1)}, {"z", Rat(-1)}}),
                    lin({{"s", Rat(3)}, {"t", Rat(-8)}, {"x", Rat(-10)}, {"z", Rat(-1)}},
                        Rat(9))};
    return tw;
}

std::string vec_to_string(const QVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << rat_to_string(v[i]);
    }
    os << ")";
    return os.str();
}

}  // namespace

Tower tower(const std::string& label) {
    if (label == "cxp2") return tower_cxp2();
    if (label == "ccc") return tower_ccc();
    if (label == "cxjac") return tower_cxjac();
    throw std::invalid_argument("unknown tower: " + label);
}

std::vector<std::string> tower_labels() { return {"cxp2", "ccc", "cxjac"}; }

Rat triple(const Tower& tw, const QVec& a, const QVec& b, const QVec& c) {
    return tw.form.eval(a, b, c);
}

std::size_t basis_index(const Tower& tw, const std::string& name) {
    const auto& names = tw.basis();
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
        throw std::invalid_argument(tw.label + ": no basis class named " + name);
    return static_cast<std::size_t>(it - names.begin());
}

namespace {

void check_params(const Tower& tw, const std::map<std::string, Rat>& values) {
    for (const auto& p : tw.params)
        if (!values.count(p))
            throw std::invalid_argument(tw.label + ": missing parameter " + p);
    for (const auto& p : tw.params) {
        if (p == "t") {
            if (values.at(p) < 0) throw std::domain_error(tw.label + ": t must be >= 0");
        } else if (values.at(p) <= 0) {
            throw std::domain_error(tw.label + ": parameter " + p + " must be positive");
        }
    }
}

const Component* find_component(const Tower& tw, const std::string& name) {
    for (const auto& c : tw.components)
        if (c.name == name) return &c;
    return nullptr;
}

}  // namespace

SigmaDecomp psigma(const Tower& tw, const std::map<std::string, Rat>& values) {
    check_params(tw, values);
    if (values.at("t") > pwl::eval(tw.mu, values))
        throw std::domain_error(tw.label + ": t exceeds the pseudoeffective threshold");

    SigmaDecomp out;
    out.ray = qvec_zero(tw.dim());
    for (std::size_t i = 0; i < tw.dim(); ++i)
        out.ray[i] = pwl::af_eval(tw.ray_class[i], values);

    out.positive = qvec_zero(tw.dim());
    for (const auto& [name, expr] : tw.positive_ledger) {
        const Component* comp = find_component(tw, name);
        if (!comp) throw std::logic_error(tw.label + ": ledger names unknown component " + name);
        const Rat coeff = pwl::eval(expr, values);
        out.positive_coeffs[name] = coeff;
        out.positive = add(out.positive, scale(coeff, comp->cls));
    }
    out.negative = qvec_zero(tw.dim());
    for (const auto& [name, expr] : tw.negative_ledger) {
        const Component* comp = find_component(tw, name);
        if (!comp) throw std::logic_error(tw.label + ": ledger names unknown component " + name);
        const Rat coeff = pwl::eval(expr, values);
        if (coeff < 0)
            throw std::logic_error(tw.label + ": negative ledger coefficient for " + name);
        if (coeff == 0) continue;
        out.negative_coeffs[name] = coeff;
        out.negative = add(out.negative, scale(coeff, comp->cls));
    }
    if (add(out.positive, out.negative) != out.ray)
        throw std::logic_error(tw.label + ": ledger decomposition does not sum to the ray class");
    return out;
}

Rat vol_ray(const Tower& tw, const std::map<std::string, Rat>& values) {
    const SigmaDecomp d = psigma(tw, values);
    return tw.form.eval(d.positive, d.positive, d.positive);
}

NefReport verify_nef3(const Tower& tw, const QVec& cls) {
    if (cls.size() != tw.dim())
        throw std::invalid_argument(tw.label + ": class dimension mismatch");
    for (const auto& comp : tw.components) {
        const QVec restricted = mat_apply(comp.restriction, cls);
        if (!comp.model.mori_generators)
            throw std::logic_error(comp.model.label + ": missing mori_generators");
        for (const QVec& g : *comp.model.mori_generators) {
            if (pair(restricted, comp.model.pairing, g) >= 0) continue;
            NefReport rep;
            rep.nef = false;
            rep.component = comp.name;
            rep.curve = vec_to_string(g);
            for (const auto& cur : comp.model.negative_curves)
                if (cur.cls == g) {
                    rep.curve = cur.name;
                    break;
                }
            return rep;
        }
    }
    return {};
}

QVec stage1_ray(const Tower& tw, const std::map<std::string, Rat>& values) {
    check_params(tw, values);
    QVec out = qvec_zero(tw.dim());
    std::map<std::string, Rat> at_zero = values;
    at_zero["t"] = Rat(0);
    for (std::size_t i = 0; i < tw.base_rank; ++i)
        out[i] = pwl::af_eval(tw.ray_class[i], at_zero);
    return out;
}

Rat divisor_degree_bound(const Tower& tw, const std::map<std::string, Rat>& values) {
    const QVec l1 = stage1_ray(tw, values);
    const std::size_t e_index = tw.base_rank;
    std::optional<Rat> best;
    for (const QVec& gen : tw.stage1_eff.gens) {
        QVec d = qvec_zero(tw.dim());
        for (std::size_t i = 0; i < gen.size(); ++i) d[i] = gen[i];
        const Rat mult = -gen[e_index];
        if (mult <= 0) continue;
        const Rat value = tw.form.eval(l1, l1, d) / mult;
        if (!best || value < *best) best = value;
    }
    if (!best) throw std::logic_error(tw.label + ": no effective generator passes the point");
    return *best;
}

}  // namespace okbody::threefold
