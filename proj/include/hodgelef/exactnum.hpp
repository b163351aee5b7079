/**
 * @file exactnum.hpp
 * @brief Exact scalars over Q and Q(i), dense matrices, and the exact linear
 * algebra the rest of the library is built on.
 *
 * Nothing here touches floating point. Rationals are GMP `mpq_class` values
 * (always canonical: positive denominator, reduced). Gaussian rationals are
 * pairs of rationals. Matrices are dense and row-major.
 *
 * Scalar text format: a rational is "a/b" or "a"; a Gaussian rational is
 * "a/b+c/d*i" where either part may be omitted ("3*i", "-1/2", "i").
 */
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hodgelef {

using Integer = mpz_class;
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re, Rational im = Rational(0)) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }
  // x * conj(x), a nonnegative rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  GaussRational operator-() const { return {-re_, -im_}; }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

GaussRational parse_gauss(std::string_view text);
std::string to_string(const GaussRational& z);

using GVector = std::vector<GaussRational>;

GVector conj(const GVector& v);
bool is_zero(const GVector& v);
GVector operator+(const GVector& a, const GVector& b);
GVector operator-(const GVector& a, const GVector& b);
GVector operator*(const GaussRational& s, const GVector& v);

class GMatrix {
 public:
  GMatrix() = default;
  GMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static GMatrix identity(std::size_t n);
  static GMatrix from_rows(const std::vector<std::vector<GaussRational>>& rows);
  static GMatrix from_columns(std::size_t rows, const std::vector<GVector>& cols);
  static GMatrix column(const GVector& v) { return from_columns(v.size(), {v}); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  GVector col(std::size_t c) const;
  std::vector<GVector> columns() const;

  GMatrix conj() const;
  GMatrix transpose() const;
  GMatrix adjoint() const { return conj().transpose(); }

  GMatrix block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const GMatrix& b);
  GMatrix select_rows(std::span<const std::size_t> idx) const;
  GMatrix select_cols(std::span<const std::size_t> idx) const;

  bool is_zero() const;
  bool is_real() const;
  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const GMatrix& a, const GMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussRational> data_;
};

GMatrix operator+(const GMatrix& a, const GMatrix& b);
GMatrix operator-(const GMatrix& a, const GMatrix& b);
GMatrix operator*(const GMatrix& a, const GMatrix& b);
GMatrix operator*(const GaussRational& s, const GMatrix& a);
GVector operator*(const GMatrix& a, const GVector& v);

// [a | b]; both must have the same row count.
GMatrix hstack(const GMatrix& a, const GMatrix& b);

// Reduced row echelon form with the pivot column of each nonzero row.
struct Echelon {
  GMatrix reduced;
  std::vector<std::size_t> pivots;
};
Echelon row_reduce(const GMatrix& m);

struct KernelRank {
  std::size_t rank = 0;
  std::vector<GVector> kernel;
};

/// Rank and a kernel basis (one vector per free column of the echelon form).
KernelRank mat_kernel_rank(const GMatrix& m);
std::size_t rank(const GMatrix& m);

std::optional<GMatrix> inverse(const GMatrix& m);
// Some x with a*x = b, or nullopt when the system is inconsistent.
std::optional<GVector> solve(const GMatrix& a, const GVector& b);

// Independent columns of m spanning its column space (the pivot columns).
GMatrix column_basis(const GMatrix& m);
// Columns of v all lie in the column span of u.
bool span_contains(const GMatrix& u, const GMatrix& v);
// Basis of span(u) ∩ span(w).
GMatrix intersect(const GMatrix& u, const GMatrix& w);

struct SignatureTriple {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  long net() const { return static_cast<long>(n_plus) - static_cast<long>(n_minus); }
  std::size_t dimension() const { return n_plus + n_minus + n_zero; }
  friend bool operator==(const SignatureTriple&, const SignatureTriple&) = default;
};

class NotHermitianError : public std::invalid_argument {
 public:
  NotHermitianError(std::size_t row, std::size_t col, std::string what)
      : std::invalid_argument(std::move(what)), row_(row), col_(col) {}
  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

// P^H * G * P == diag(diagonal), P invertible.
struct CongruenceDiagonalization {
  std::vector<Rational> diagonal;
  GMatrix transform;
};

/// Hermitian congruence diagonalization with pivot search. A zero diagonal
/// with a nonzero off-diagonal entry g_ij is repaired by adding conj(g_ij)
/// times column j to column i (and the matching row move), giving the
/// positive pivot 2|g_ij|^2.
CongruenceDiagonalization congruence_diagonalize(const GMatrix& g);

SignatureTriple hermitian_signature(const GMatrix& g);

}  // namespace hodgelef
