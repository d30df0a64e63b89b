#pragma once

// Exact polynomials in q over the integers, and sparse square matrices over Z[q].

#include <boost/rational.hpp>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gelfand {

using Rational = boost::rational<std::int64_t>;

/// Element of Z[q]. Coefficients are 64-bit with checked overflow; arithmetic
/// that would overflow throws ArithmeticError. Canonical form keeps no
/// trailing zero coefficients, so the zero polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::int64_t constant);  // NOLINT(google-explicit-constructor)
  /// coeffs[i] is the coefficient of q^i.
  static QPoly from_coeffs(std::vector<std::int64_t> coeffs);
  static QPoly monomial(std::int64_t coeff, int degree);
  static QPoly q() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t coeff(int degree) const;
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  Rational eval(Rational at) const;
  std::int64_t eval(std::int64_t at) const;

  QPoly& operator+=(const QPoly& g);
  QPoly& operator-=(const QPoly& g);
  QPoly& operator*=(const QPoly& g);

  friend QPoly operator+(QPoly f, const QPoly& g) { return f += g; }
  friend QPoly operator-(QPoly f, const QPoly& g) { return f -= g; }
  friend QPoly operator*(QPoly f, const QPoly& g) { return f *= g; }
  friend QPoly operator-(const QPoly& f);
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// "a0 + a1q + a2q^2", zero terms omitted, unit coefficients elided ("1 - q + q^2").
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

QPoly pow(const QPoly& base, int exponent);

/// Sparse square matrix over Z[q], stored by columns with rows ascending.
class PolyMatrix {
 public:
  struct Entry {
    std::size_t row;
    QPoly value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  using Column = std::vector<Entry>;

  PolyMatrix() = default;
  explicit PolyMatrix(std::size_t dim) : columns_(dim) {}
  static PolyMatrix identity(std::size_t dim);

  std::size_t dim() const { return columns_.size(); }
  const Column& column(std::size_t col) const { return columns_[col]; }
  QPoly at(std::size_t row, std::size_t col) const;
  /// Assigns (zero erases). Throws SizeError on out-of-range indices.
  void set(std::size_t row, std::size_t col, QPoly value);
  /// Adds `value` to the entry at (row, col).
  void add(std::size_t row, std::size_t col, const QPoly& value);
  std::size_t nonzeros() const;

  PolyMatrix& operator+=(const PolyMatrix& b);
  PolyMatrix& operator-=(const PolyMatrix& b);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const QPoly& s, const PolyMatrix& a);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::vector<Column> columns_;
};

/// A * B, columns of the product computed in parallel. Throws SizeError on dim mismatch.
PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
QPoly mat_trace(const PolyMatrix& a);
inline PolyMatrix mat_identity(std::size_t dim) { return PolyMatrix::identity(dim); }
inline bool mat_eq(const PolyMatrix& a, const PolyMatrix& b) { return a == b; }
/// Ordered product of the matrices; `dim` is used for the empty product.
PolyMatrix mat_product(const std::vector<const PolyMatrix*>& factors, std::size_t dim);
/// Entrywise evaluation at an integer value of q.
PolyMatrix specialize(const PolyMatrix& a, std::int64_t at);

/// {"dim": d, "entries": [[row, col, [c0, c1, ...]], ...]} sorted by (row, col).
nlohmann::json to_json(const PolyMatrix& a);
PolyMatrix poly_matrix_from_json(const nlohmann::json& j);
/// Compact single-line dump of to_json, stable across runs.
std::string to_canonical_json(const PolyMatrix& a);

namespace serial {
/// Reference product: accumulates every pair of entries A(i,k) B(k,j) into an ordered map.
PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
}  // namespace serial

}  // namespace gelfand
