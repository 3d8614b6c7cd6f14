#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "okbody/linalg.hpp"

#include <random>

using namespace okbody;

namespace {

Rat q(long n, long d = 1) { return make_rat(n, d); }

QVec qv(std::initializer_list<long> xs) {
    QVec v;
    for (long x : xs) v.push_back(Rat(x));
    return v;
}

std::mt19937 rng(20230815);

Rat random_rat() {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    return make_rat(num(rng), den(rng));
}

QMat random_mat(std::size_t r, std::size_t c) {
    QMat m(r, QVec(c));
    for (auto& row : m)
        for (auto& x : row) x = random_rat();
    return m;
}

/// Cofactor expansion, an independent determinant oracle for small sizes.
Rat det_cofactor(const QMat& m) {
    const std::size_t n = m.size();
    if (n == 0) return Rat(1);
    if (n == 1) return m[0][0];
    Rat acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        QMat minor;
        for (std::size_t i = 1; i < n; ++i) {
            QVec row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        const Rat term = m[0][j] * det_cofactor(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

TEST_CASE("vector basics") {
    CHECK(add(qv({1, 2}), qv({3, -5})) == qv({4, -3}));
    CHECK(sub(qv({1, 2}), qv({3, -5})) == qv({-2, 7}));
    CHECK(scale(q(1, 2), qv({4, -6})) == (QVec{q(2), q(-3)}));
    CHECK(dot(qv({1, 2, 3}), qv({4, 5, 6})) == 32);
    CHECK(is_zero(qvec_zero(3)));
    CHECK_FALSE(is_zero(qv({0, 1})));
}

TEST_CASE("pairing and matrix ops") {
    const QMat m = {qv({0, 1}), qv({1, 0})};
    CHECK(pair(qv({2, 3}), m, qv({5, 7})) == 2 * 7 + 3 * 5);
    CHECK(mat_apply(m, qv({5, 7})) == qv({7, 5}));
    CHECK(mat_transpose({qv({1, 2, 3}), qv({4, 5, 6})}) ==
          (QMat{qv({1, 4}), qv({2, 5}), qv({3, 6})}));
    CHECK(mat_mul(m, m) == mat_identity(2));
}

TEST_CASE("primitive scaling") {
    CHECK(primitive({q(1, 2), q(-3, 4)}) == qv({2, -3}));
    CHECK(primitive(qv({-2, 4})) == qv({-1, 2}));
    CHECK(primitive(qv({-2, 4}), true) == qv({1, -2}));
    CHECK(primitive(qv({0, 0, -6})) == qv({0, 0, -1}));
    CHECK(primitive(qv({0, 0, -6}), true) == qv({0, 0, 1}));
}

TEST_CASE("rank and kernel on known systems") {
    CHECK(rank({qv({1, 2}), qv({2, 4})}) == 1);
    CHECK(rank({qv({1, 0}), qv({0, 1})}) == 2);
    CHECK(rank(QMat{}) == 0);
    const QMat m = {qv({1, 1, 1}), qv({1, 2, 3})};
    const QMat k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(is_zero(mat_apply(m, k[0])));
}

TEST_CASE("kernel vectors always annihilate (randomized)") {
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<std::size_t> rd(1, 5);
        const std::size_t r = rd(rng), c = rd(rng);
        const QMat m = random_mat(r, c);
        const QMat k = kernel_basis(m);
        CHECK(rank(m) + k.size() == c);
        for (const auto& v : k) {
            CHECK_FALSE(is_zero(v));
            CHECK(is_zero(mat_apply(m, v)));
        }
        CHECK(rank(k) == k.size());
    }
}

TEST_CASE("solve on known systems") {
    const auto x = solve({qv({2, 1}), qv({1, 3})}, qv({5, 10}));
    REQUIRE(x.has_value());
    CHECK(*x == (QVec{q(1), q(3)}));
    CHECK_FALSE(solve({qv({1, 1}), qv({2, 2})}, qv({1, 3})).has_value());
    // Underdetermined: a particular solution is still a solution.
    const auto y = solve({qv({1, 1, 1})}, qv({6}));
    REQUIRE(y.has_value());
    CHECK(dot(qv({1, 1, 1}), *y) == 6);
}

TEST_CASE("solve results satisfy the system (randomized)") {
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<std::size_t> rd(1, 5);
        const std::size_t r = rd(rng), c = rd(rng);
        const QMat m = random_mat(r, c);
        QVec x0(c);
        for (auto& v : x0) v = random_rat();
        const QVec b = mat_apply(m, x0);
        const auto x = solve(m, b);
        REQUIRE(x.has_value());  // consistent by construction
        CHECK(mat_apply(m, *x) == b);
    }
}

TEST_CASE("solve_many inverts matrices") {
    const QMat m = {qv({2, 1}), qv({1, 1})};
    const auto inv_cols = solve_many(m, {qv({1, 0}), qv({0, 1})});
    REQUIRE(inv_cols.has_value());
    const QMat inv = mat_transpose(*inv_cols);  // columns back to rows
    CHECK(mat_mul(m, inv) == mat_identity(2));
}

TEST_CASE("determinant matches cofactor expansion") {
    CHECK(det({qv({1, 2}), qv({3, 4})}) == -2);
    CHECK(det({qv({1, 2}), qv({2, 4})}) == 0);
    CHECK(det(mat_identity(4)) == 1);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> rd(1, 4);
        const std::size_t n = rd(rng);
        const QMat m = random_mat(n, n);
        CHECK(det(m) == det_cofactor(m));
    }
}

TEST_CASE("affine rank") {
    CHECK(affine_rank({qv({5, 5})}) == 0);
    CHECK(affine_rank({qv({0, 0}), qv({1, 1}), qv({2, 2})}) == 1);
    CHECK(affine_rank({qv({0, 0}), qv({1, 0}), qv({0, 1})}) == 2);
    CHECK(affine_rank({}) == 0);
}

TEST_CASE("negative definiteness") {
    CHECK(is_negative_definite({qv({-1})}));
    CHECK_FALSE(is_negative_definite({qv({1})}));
    CHECK_FALSE(is_negative_definite({qv({0})}));
    CHECK(is_negative_definite({qv({-2, 1}), qv({1, -2})}));
    CHECK_FALSE(is_negative_definite({qv({-1, 2}), qv({2, -1})}));
    // Exceptional-curve Gram blocks from blowup chains are negative definite.
    CHECK(is_negative_definite({qv({-2, 1, 0}), qv({1, -2, 1}), qv({0, 1, -2})}));
    CHECK_FALSE(is_negative_definite({qv({-2, 3, 0}), qv({3, -2, 1}), qv({0, 1, -2})}));
}

TEST_CASE("negative definiteness agrees with random quadratic samples") {
    for (int trial = 0; trial < 80; ++trial) {
        std::uniform_int_distribution<std::size_t> rd(1, 4);
        const std::size_t n = rd(rng);
        QMat g = random_mat(n, n);
        // Symmetrize.
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) g[i][j] = g[j][i];
        if (is_negative_definite(g)) {
            for (int probe = 0; probe < 30; ++probe) {
                QVec v(n);
                for (auto& x : v) x = random_rat();
                if (!is_zero(v)) CHECK(pair(v, g, v) < 0);
            }
        } else {
            // A non-negative-definite form admits a witness v with v^T G v >= 0;
            // search coordinate vectors, kernel vectors, then random probes.
            bool witness = false;
            for (std::size_t i = 0; i < n && !witness; ++i) {
                QVec e = qvec_zero(n);
                e[i] = 1;
                witness = pair(e, g, e) >= 0;
            }
            for (const auto& v : kernel_basis(g))
                if (!witness) witness = pair(v, g, v) >= 0;
            for (int probe = 0; probe < 200 && !witness; ++probe) {
                QVec v(n);
                for (auto& x : v) x = random_rat();
                witness = !is_zero(v) && pair(v, g, v) >= 0;
            }
            CHECK(witness);
        }
    }
}
