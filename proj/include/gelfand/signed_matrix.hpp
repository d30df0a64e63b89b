#pragma once

#include <cstddef>
#include <vector>

#include "gelfand/qpoly.hpp"

namespace gelfand {

/// Monomial matrix with entries in {0, +1, -1}: column j holds `sign[j]` in row `row[j]`.
class SignedPermMatrix {
 public:
  struct Target {
    std::size_t row;
    int sign;
    friend bool operator==(const Target&, const Target&) = default;
  };

  SignedPermMatrix() = default;
  /// Throws std::invalid_argument unless rows form a bijection and signs are +-1.
  explicit SignedPermMatrix(std::vector<Target> columns);
  static SignedPermMatrix identity(std::size_t dim);

  std::size_t dim() const { return columns_.size(); }
  const Target& column(std::size_t j) const { return columns_[j]; }
  int trace() const;

  /// Matrix product. Throws SizeError on dim mismatch.
  friend SignedPermMatrix operator*(const SignedPermMatrix& a, const SignedPermMatrix& b);
  friend bool operator==(const SignedPermMatrix&, const SignedPermMatrix&) = default;

  /// The same matrix over Z[q] (constant entries).
  PolyMatrix to_poly_matrix() const;

 private:
  std::vector<Target> columns_;
};

/// a^k by repeated multiplication; k >= 0.
SignedPermMatrix power(const SignedPermMatrix& a, int k);

}  // namespace gelfand
