#pragma once

// Exact integer and rational linear algebra for the small dimensions
// (r <= 8) that occur on ADE slices.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace knitwall {

using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<std::int64_t>;

/// "p/q" with q > 0; integers are written "p/1" so the format is uniform.
std::string to_string(const Rational& q);
/// Inverse of to_string. Accepts "p/q" or a bare integer "p".
Rational parse_rational(const std::string& text);

/// Overflow-checked helpers; throw ResourceError on int64 overflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

std::int64_t gcd_of(std::span<const std::int64_t> v);
std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
Rational dot(std::span<const std::int64_t> a, std::span<const Rational> b);

/// Divides by the gcd of the entries. Zero vectors are returned unchanged.
IntVector primitive(IntVector v);

/// A primitive integer linear functional with its first nonzero entry
/// positive. Two hyperplanes through the origin coincide iff their
/// covectors are equal.
class Covector {
 public:
  Covector() = default;
  /// Normalizes `coeffs`; throws ArgumentError on the zero vector.
  explicit Covector(IntVector coeffs);
  /// Sign (+1/-1) that `raw` had relative to its normalized form.
  static int orientation_of(const IntVector& raw);

  const IntVector& coeffs() const { return coeffs_; }
  std::size_t dim() const { return coeffs_.size(); }
  std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }

  /// Human form such as "ϑ1+2ϑ3" used in text output.
  std::string pretty() const;

  friend auto operator<=>(const Covector&, const Covector&) = default;
  friend bool operator==(const Covector&, const Covector&) = default;

 private:
  IntVector coeffs_;
};

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntVector apply(std::span<const std::int64_t> v) const;
  std::vector<Rational> apply(std::span<const Rational> v) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Exact determinant (Bareiss fraction-free elimination).
boost::multiprecision::cpp_int determinant(const IntMatrix& m);

/// Rank over Q of a list of integer vectors of equal length.
std::size_t rank_of(std::span<const IntVector> vectors);

/// Incremental row-echelon basis: insert() reduces a vector against the
/// basis and keeps it if independent. Used for subset-rank sweeps.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}
  /// Returns true if `v` increased the rank.
  bool insert(const IntVector& v);
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  std::size_t dim_;
  std::vector<IntVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace knitwall
