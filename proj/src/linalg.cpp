#include "knitwall/linalg.hpp"

#include "knitwall/errors.hpp"

#include <numeric>
#include <sstream>

namespace knitwall {

namespace mp = boost::multiprecision;

std::string to_string(const Rational& q) {
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(mp::cpp_int(text));
    mp::cpp_int num(text.substr(0, slash));
    mp::cpp_int den(text.substr(slash + 1));
    if (den == 0) throw ArgumentError("zero denominator in rational '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw ArgumentError("malformed rational '" + text + "'");
  }
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw ResourceError("int64 overflow in addition");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw ResourceError("int64 overflow in multiplication");
  return out;
}

std::int64_t gcd_of(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  if (a.size() != b.size()) throw ArgumentError("dot: length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

Rational dot(std::span<const std::int64_t> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw ArgumentError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += a[i] * b[i];
  return s;
}

IntVector primitive(IntVector v) {
  const auto g = gcd_of(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

Covector::Covector(IntVector coeffs) : coeffs_(primitive(std::move(coeffs))) {
  const int s = orientation_of(coeffs_);
  if (s == 0) throw ArgumentError("covector must be nonzero");
  if (s < 0)
    for (auto& x : coeffs_) x = -x;
}

int Covector::orientation_of(const IntVector& raw) {
  for (auto x : raw)
    if (x != 0) return x > 0 ? 1 : -1;
  return 0;
}

std::string Covector::pretty() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto c = coeffs_[i];
    if (c == 0) continue;
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    if (c != 1 && c != -1) os << (c < 0 ? -c : c);
    os << "ϑ" << (i + 1);
    first = false;
  }
  return os.str();
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntVector IntMatrix::apply(std::span<const std::int64_t> v) const {
  if (v.size() != cols_) throw ArgumentError("matrix/vector size mismatch");
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    out[r] = dot(std::span(data_).subspan(r * cols_, cols_), v);
  return out;
}

std::vector<Rational> IntMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw ArgumentError("matrix/vector size mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    out[r] = dot(std::span(data_).subspan(r * cols_, cols_), v);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw ArgumentError("matrix product size mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = checked_add(out(i, j), checked_mul(aik, b(k, j)));
    }
  return out;
}

mp::cpp_int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ArgumentError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<mp::cpp_int>> a(n, std::vector<mp::cpp_int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  mp::cpp_int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

bool EchelonBasis::insert(const IntVector& v) {
  if (v.size() != dim_) throw ArgumentError("echelon insert: dimension mismatch");
  IntVector w = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const auto p = pivots_[k];
    if (w[p] == 0) continue;
    const auto& row = rows_[k];
    const std::int64_t a = row[p];
    const std::int64_t b = w[p];
    for (std::size_t j = 0; j < dim_; ++j)
      w[j] = checked_add(checked_mul(a, w[j]), -checked_mul(b, row[j]));
    w = primitive(std::move(w));
  }
  std::size_t pivot = 0;
  while (pivot < dim_ && w[pivot] == 0) ++pivot;
  if (pivot == dim_) return false;
  rows_.push_back(std::move(w));
  pivots_.push_back(pivot);
  return true;
}

std::size_t rank_of(std::span<const IntVector> vectors) {
  if (vectors.empty()) return 0;
  EchelonBasis basis(vectors.front().size());
  for (const auto& v : vectors) basis.insert(v);
  return basis.rank();
}

}  // namespace knitwall
