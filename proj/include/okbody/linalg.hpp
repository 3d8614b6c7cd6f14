#pragma once

#include "okbody/rat.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace okbody {

/// Dense exact vector/matrix toolkit over Q. Everything here is plain
/// Gaussian elimination; with exact fractions there is no conditioning to
/// worry about, only canonical forms.
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

QVec qvec_zero(std::size_t n);
QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const Rat& c, const QVec& a);
Rat dot(const QVec& a, const QVec& b);
bool is_zero(const QVec& a);

/// y^T M x; the bilinear pairing used for intersection forms.
Rat pair(const QVec& y, const QMat& m, const QVec& x);

QVec mat_apply(const QMat& m, const QVec& x);
QMat mat_transpose(const QMat& m);
QMat mat_mul(const QMat& a, const QMat& b);
QMat mat_identity(std::size_t n);

/// Scales a nonzero rational vector to the unique primitive integer vector
/// with the same direction (coprime entries, positive leading sign only when
/// `fix_sign`). Rays canonicalize without sign fixing; line directions with.
QVec primitive(const QVec& v, bool fix_sign = false);

std::size_t rank(QMat m);

/// Basis of { x : M x = 0 }, in reduced echelon convention (deterministic).
QMat kernel_basis(const QMat& m);

/// Solves M x = b for square or rectangular M; nullopt when inconsistent.
/// Underdetermined systems return the particular solution with free
/// variables set to zero.
std::optional<QVec> solve(QMat m, QVec b);

/// Solves M X = B column-wise for several right-hand sides at once.
std::optional<QMat> solve_many(const QMat& m, const QMat& rhs_columns);

Rat det(QMat m);

/// Affine rank of a point set (dimension of its affine hull).
std::size_t affine_rank(const std::vector<QVec>& points);

/// Leading-principal-minor test: true iff v^T G v < 0 for all v != 0.
bool is_negative_definite(const QMat& g);

}  // namespace okbody
