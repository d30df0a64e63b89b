#include "gelfand/signed_matrix.hpp"

#include <stdexcept>

#include "gelfand/errors.hpp"

namespace gelfand {

SignedPermMatrix::SignedPermMatrix(std::vector<Target> columns) : columns_(std::move(columns)) {
  std::vector<bool> hit(columns_.size(), false);
  for (const auto& t : columns_) {
    if (t.row >= columns_.size() || hit[t.row] || (t.sign != 1 && t.sign != -1)) {
      throw std::invalid_argument("SignedPermMatrix: not a signed permutation matrix");
    }
    hit[t.row] = true;
  }
}

SignedPermMatrix SignedPermMatrix::identity(std::size_t dim) {
  std::vector<Target> cols(dim);
  for (std::size_t j = 0; j < dim; ++j) cols[j] = {j, 1};
  SignedPermMatrix m;
  m.columns_ = std::move(cols);
  return m;
}

int SignedPermMatrix::trace() const {
  int t = 0;
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (columns_[j].row == j) t += columns_[j].sign;
  }
  return t;
}

SignedPermMatrix operator*(const SignedPermMatrix& a, const SignedPermMatrix& b) {
  if (a.dim() != b.dim()) throw SizeError("SignedPermMatrix *: dim mismatch");
  SignedPermMatrix r;
  r.columns_.resize(a.dim());
  for (std::size_t j = 0; j < b.dim(); ++j) {
    const auto& mid = b.columns_[j];
    const auto& out = a.columns_[mid.row];
    r.columns_[j] = {out.row, mid.sign * out.sign};
  }
  return r;
}

PolyMatrix SignedPermMatrix::to_poly_matrix() const {
  PolyMatrix m(dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set(columns_[j].row, j, QPoly(columns_[j].sign));
  return m;
}

SignedPermMatrix power(const SignedPermMatrix& a, int k) {
  SignedPermMatrix r = SignedPermMatrix::identity(a.dim());
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

}  // namespace gelfand
