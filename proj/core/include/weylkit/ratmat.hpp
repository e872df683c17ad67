// ratmat.hpp — exact rational vectors/matrices and integer Smith normal form.
//
// Thin exact-arithmetic layer over GMP (mpq_class / mpz_class): the dense
// routines every module shares — dot products, Gaussian elimination for
// determinant / inverse / rank / solve, and the Smith normal form used for
// lattice quotients.  Everything is zero-tolerance exact; no floating point.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weylkit/errors.hpp"

namespace weylkit {

using Rat = mpq_class;
using Int = mpz_class;
using Vec = std::vector<Rat>;

// ---------------------------------------------------------------------------
// Vector helpers
// ---------------------------------------------------------------------------

/// Exact dot product; throws DimensionMismatch on length disagreement.
[[nodiscard]] Rat dot(const Vec& a, const Vec& b);

[[nodiscard]] Vec vec_add(const Vec& a, const Vec& b);
[[nodiscard]] Vec vec_sub(const Vec& a, const Vec& b);
[[nodiscard]] Vec vec_scale(const Rat& c, const Vec& v);
[[nodiscard]] Vec vec_neg(const Vec& v);
[[nodiscard]] bool vec_is_zero(const Vec& v);

/// Canonical text form "(a, b, c)" with rationals as "p/q" or "n".
[[nodiscard]] std::string vec_to_string(const Vec& v);

/// Canonical text of one rational ("p/q" in lowest terms, or "n").
[[nodiscard]] std::string rat_to_string(const Rat& x);

/// True iff the rational has denominator 1.
[[nodiscard]] bool rat_is_integer(const Rat& x);

/// Parse "p/q" or "n"; throws ParseError on malformed input.
[[nodiscard]] Rat rat_from_string(const std::string& s);

// ---------------------------------------------------------------------------
// Dense rational matrix
// ---------------------------------------------------------------------------

/// Dense row-major matrix of exact rationals.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  [[nodiscard]] static Mat identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  [[nodiscard]] Rat& at(std::size_t i, std::size_t j) {
    return a_[i * cols_ + j];
  }
  [[nodiscard]] const Rat& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  [[nodiscard]] Mat transpose() const;
  [[nodiscard]] Mat operator*(const Mat& other) const;
  [[nodiscard]] Vec apply(const Vec& v) const;  // this * v (column vector)
  [[nodiscard]] bool operator==(const Mat& other) const;

  /// Determinant by exact Gaussian elimination (square matrices only).
  [[nodiscard]] Rat det() const;

  /// Exact inverse, or nullopt when singular (square matrices only).
  [[nodiscard]] std::optional<Mat> inverse() const;

  /// Rank over the rationals.
  [[nodiscard]] std::size_t rank() const;

  /// Row of the matrix as a vector.
  [[nodiscard]] Vec row(std::size_t i) const;

  /// Column of the matrix as a vector.
  [[nodiscard]] Vec col(std::size_t j) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

/// Matrix whose columns are the given vectors (all of equal length).
[[nodiscard]] Mat mat_from_columns(const std::vector<Vec>& columns);

/// Matrix whose rows are the given vectors (all of equal length).
[[nodiscard]] Mat mat_from_rows(const std::vector<Vec>& rows);

/// Solve M x = b exactly.  Returns nullopt when inconsistent; when the
/// solution space is positive-dimensional the free variables are set to 0,
/// so full-column-rank systems yield their unique solution.
[[nodiscard]] std::optional<Vec> solve(const Mat& m, const Vec& b);

/// Rank of the span of a set of row vectors.
[[nodiscard]] std::size_t rank_of_span(const std::vector<Vec>& vectors);

// ---------------------------------------------------------------------------
// Integer matrices and Smith normal form
// ---------------------------------------------------------------------------

/// Dense row-major matrix of exact integers (Cartan matrices, lattice maps).
class ZMat {
 public:
  ZMat() : rows_(0), cols_(0) {}
  ZMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

  [[nodiscard]] static ZMat identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  [[nodiscard]] Int& at(std::size_t i, std::size_t j) {
    return a_[i * cols_ + j];
  }
  [[nodiscard]] const Int& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  [[nodiscard]] ZMat transpose() const;
  [[nodiscard]] ZMat operator*(const ZMat& other) const;
  [[nodiscard]] bool operator==(const ZMat& other) const;

  /// Promote to a rational matrix.
  [[nodiscard]] Mat to_mat() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

/// Invariant-factor decomposition L * A * R = D with L, R unimodular and D
/// diagonal, d_1 | d_2 | … (non-negative diagonal).
struct SmithForm {
  ZMat left;      // L
  ZMat diagonal;  // D
  ZMat right;     // R
};

/// Smith normal form; asserts L*A*R == D before returning.
[[nodiscard]] SmithForm smith_normal_form(const ZMat& a);

}  // namespace weylkit
