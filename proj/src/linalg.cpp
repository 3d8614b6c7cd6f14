#include "okbody/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace okbody {

QVec qvec_zero(std::size_t n) { return QVec(n, Rat(0)); }

QVec add(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec sub(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec scale(const Rat& c, const QVec& a) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Rat dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const QVec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

Rat pair(const QVec& y, const QMat& m, const QVec& x) { return dot(y, mat_apply(m, x)); }

QVec mat_apply(const QMat& m, const QVec& x) {
    QVec r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], x);
    return r;
}

QMat mat_transpose(const QMat& m) {
    if (m.empty()) return {};
    QMat t(m[0].size(), QVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

QMat mat_mul(const QMat& a, const QMat& b) {
    QMat bt = mat_transpose(b);
    QMat r(a.size(), QVec(bt.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < bt.size(); ++j) r[i][j] = dot(a[i], bt[j]);
    return r;
}

QMat mat_identity(std::size_t n) {
    QMat m(n, qvec_zero(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QVec primitive(const QVec& v, bool fix_sign) {
    Int l(1);
    for (const auto& x : v) l = lcm(l, denominator(x));
    Int g(0);
    QVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Int n = numerator(v[i]) * (l / denominator(v[i]));
        g = gcd(g, n);
        r[i] = Rat(n);
    }
    if (g == 0) return r;  // zero vector stays zero
    int lead = 0;
    for (const auto& x : r)
        if (x != 0) {
            lead = x.sign();
            break;
        }
    if (fix_sign && lead < 0) g = -g;
    for (auto& x : r) x /= Rat(g);
    return r;
}

namespace {

// Row echelon with partial pivoting by first nonzero; returns pivot columns.
// Mutates m in place; optional rhs carried along.
std::vector<std::size_t> echelon(QMat& m, QVec* rhs) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        if (rhs) std::swap((*rhs)[p], (*rhs)[r]);
        const Rat inv = Rat(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        if (rhs) (*rhs)[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
            if (rhs) (*rhs)[i] -= f * (*rhs)[r];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(QMat m) { return echelon(m, nullptr).size(); }

QMat kernel_basis(const QMat& m) {
    if (m.empty()) return {};
    const std::size_t cols = m[0].size();
    QMat e = m;
    const auto pivots = echelon(e, nullptr);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    QMat basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVec v = qvec_zero(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> solve(QMat m, QVec b) {
    if (m.size() != b.size()) throw std::invalid_argument("solve: size mismatch");
    if (m.empty()) return QVec{};
    const std::size_t cols = m[0].size();
    const auto pivots = echelon(m, &b);
    for (std::size_t i = pivots.size(); i < m.size(); ++i)
        if (b[i] != 0) return std::nullopt;
    QVec x = qvec_zero(cols);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = b[r];
    return x;
}

std::optional<QMat> solve_many(const QMat& m, const QMat& rhs_columns) {
    QMat out;
    for (const auto& b : rhs_columns) {
        auto x = solve(m, b);
        if (!x) return std::nullopt;
        out.push_back(std::move(*x));
    }
    return out;
}

Rat det(QMat m) {
    const std::size_t n = m.size();
    Rat d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        const Rat inv = Rat(1) / m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            const Rat f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

std::size_t affine_rank(const std::vector<QVec>& points) {
    if (points.size() <= 1) return 0;
    QMat diffs;
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
    return rank(std::move(diffs));
}

bool is_negative_definite(const QMat& g) {
    const std::size_t n = g.size();
    for (std::size_t k = 1; k <= n; ++k) {
        QMat minor(k, QVec(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor[i][j] = g[i][j];
        const Rat d = det(std::move(minor));
        if (k % 2 == 1 ? d >= 0 : d <= 0) return false;
    }
    return true;
}

}  // namespace okbody
