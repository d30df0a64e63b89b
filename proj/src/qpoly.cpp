#include "gelfand/qpoly.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <sstream>
#include <tuple>

#include "gelfand/errors.hpp"

namespace gelfand {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("QPoly: coefficient overflow in +");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("QPoly: coefficient overflow in *");
  return r;
}

std::int64_t checked_neg(std::int64_t a) { return checked_mul(a, -1); }

}  // namespace

QPoly::QPoly(std::int64_t constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QPoly QPoly::from_coeffs(std::vector<std::int64_t> coeffs) {
  QPoly f;
  f.coeffs_ = std::move(coeffs);
  f.trim();
  return f;
}

QPoly QPoly::monomial(std::int64_t coeff, int degree) {
  if (degree < 0) throw std::invalid_argument("QPoly::monomial: negative degree");
  if (coeff == 0) return {};
  QPoly f;
  f.coeffs_.assign(static_cast<std::size_t>(degree) + 1, 0);
  f.coeffs_.back() = coeff;
  return f;
}

std::int64_t QPoly::coeff(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(degree)];
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPoly::eval(Rational at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + Rational(*it);
  return acc;
}

std::int64_t QPoly::eval(std::int64_t at) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = checked_add(checked_mul(acc, at), *it);
  }
  return acc;
}

QPoly& QPoly::operator+=(const QPoly& g) {
  if (g.coeffs_.size() > coeffs_.size()) coeffs_.resize(g.coeffs_.size(), 0);
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], g.coeffs_[i]);
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& g) { return *this += -g; }

QPoly& QPoly::operator*=(const QPoly& g) {
  if (is_zero() || g.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<std::int64_t> prod(coeffs_.size() + g.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
      prod[i + j] = checked_add(prod[i + j], checked_mul(coeffs_[i], g.coeffs_[j]));
    }
  }
  coeffs_ = std::move(prod);
  trim();
  return *this;
}

QPoly operator-(const QPoly& f) {
  QPoly r = f;
  for (auto& c : r.coeffs_) c = checked_neg(c);
  return r;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const std::int64_t c = coeffs_[d];
    if (c == 0) continue;
    const bool negative = c < 0;
    const std::uint64_t mag = negative ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    if (d == 0 || mag != 1) os << mag;
    if (d >= 1) os << 'q';
    if (d >= 2) os << '^' << d;
    first = false;
  }
  return os.str();
}

QPoly pow(const QPoly& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("pow: negative exponent");
  QPoly r(1);
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

// PolyMatrix

PolyMatrix PolyMatrix::identity(std::size_t dim) {
  PolyMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.columns_[i].push_back({i, QPoly(1)});
  return m;
}

QPoly PolyMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= dim() || col >= dim()) throw SizeError("PolyMatrix::at: index out of range");
  const auto& c = columns_[col];
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const Entry& e, std::size_t r) { return e.row < r; });
  return it != c.end() && it->row == row ? it->value : QPoly();
}

void PolyMatrix::set(std::size_t row, std::size_t col, QPoly value) {
  if (row >= dim() || col >= dim()) throw SizeError("PolyMatrix::set: index out of range");
  auto& c = columns_[col];
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const Entry& e, std::size_t r) { return e.row < r; });
  if (it != c.end() && it->row == row) {
    if (value.is_zero()) {
      c.erase(it);
    } else {
      it->value = std::move(value);
    }
  } else if (!value.is_zero()) {
    c.insert(it, Entry{row, std::move(value)});
  }
}

void PolyMatrix::add(std::size_t row, std::size_t col, const QPoly& value) {
  set(row, col, at(row, col) + value);
}

std::size_t PolyMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& c : columns_) total += c.size();
  return total;
}

namespace {

// Merges two row-sorted columns, scaling the second by `sign`.
PolyMatrix::Column merge_columns(const PolyMatrix::Column& a, const PolyMatrix::Column& b,
                                 int sign) {
  PolyMatrix::Column out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].row < b[j].row)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].row < a[i].row) {
      out.push_back({b[j].row, sign > 0 ? b[j].value : -b[j].value});
      ++j;
    } else {
      QPoly v = sign > 0 ? a[i].value + b[j].value : a[i].value - b[j].value;
      if (!v.is_zero()) out.push_back({a[i].row, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& b) {
  if (dim() != b.dim()) throw SizeError("PolyMatrix +: dim mismatch");
  for (std::size_t c = 0; c < dim(); ++c) columns_[c] = merge_columns(columns_[c], b.columns_[c], +1);
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& b) {
  if (dim() != b.dim()) throw SizeError("PolyMatrix -: dim mismatch");
  for (std::size_t c = 0; c < dim(); ++c) columns_[c] = merge_columns(columns_[c], b.columns_[c], -1);
  return *this;
}

PolyMatrix operator*(const QPoly& s, const PolyMatrix& a) {
  PolyMatrix r(a.dim());
  if (s.is_zero()) return r;
  for (std::size_t c = 0; c < a.dim(); ++c) {
    for (const auto& e : a.columns_[c]) r.columns_[c].push_back({e.row, s * e.value});
  }
  return r;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.dim() != b.dim()) throw SizeError("mat_mul: dim mismatch");
  const std::size_t dim = a.dim();
  PolyMatrix result(dim);
  std::vector<PolyMatrix::Column> cols(dim);
  // Column j of A*B is the combination of A's columns weighted by B's column j.
  std::exception_ptr error;
#pragma omp parallel for schedule(static)
  for (std::size_t j = 0; j < dim; ++j) {
    try {
      PolyMatrix::Column acc;
      for (const auto& bk : b.column(j)) {
        PolyMatrix::Column scaled;
        scaled.reserve(a.column(bk.row).size());
        for (const auto& ai : a.column(bk.row)) scaled.push_back({ai.row, ai.value * bk.value});
        acc = merge_columns(acc, scaled, +1);
      }
      cols[j] = std::move(acc);
    } catch (...) {
#pragma omp critical(gelfand_mat_mul_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  for (std::size_t j = 0; j < dim; ++j) {
    for (auto& e : cols[j]) result.set(e.row, j, std::move(e.value));
  }
  return result;
}

QPoly mat_trace(const PolyMatrix& a) {
  QPoly t;
  for (std::size_t i = 0; i < a.dim(); ++i) t += a.at(i, i);
  return t;
}

PolyMatrix mat_product(const std::vector<const PolyMatrix*>& factors, std::size_t dim) {
  PolyMatrix acc = PolyMatrix::identity(dim);
  for (const PolyMatrix* f : factors) acc = mat_mul(acc, *f);
  return acc;
}

PolyMatrix specialize(const PolyMatrix& a, std::int64_t at) {
  PolyMatrix r(a.dim());
  for (std::size_t c = 0; c < a.dim(); ++c) {
    for (const auto& e : a.column(c)) r.set(e.row, c, QPoly(e.value.eval(at)));
  }
  return r;
}

nlohmann::json to_json(const PolyMatrix& a) {
  std::vector<std::tuple<std::size_t, std::size_t, const QPoly*>> entries;
  for (std::size_t c = 0; c < a.dim(); ++c) {
    for (const auto& e : a.column(c)) entries.emplace_back(e.row, c, &e.value);
  }
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) {
    return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y));
  });
  nlohmann::json list = nlohmann::json::array();
  for (const auto& [r, c, v] : entries) list.push_back({r, c, v->coeffs()});
  return {{"dim", a.dim()}, {"entries", std::move(list)}};
}

PolyMatrix poly_matrix_from_json(const nlohmann::json& j) {
  PolyMatrix m(j.at("dim").get<std::size_t>());
  for (const auto& e : j.at("entries")) {
    m.set(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(),
          QPoly::from_coeffs(e.at(2).get<std::vector<std::int64_t>>()));
  }
  return m;
}

std::string to_canonical_json(const PolyMatrix& a) { return to_json(a).dump(); }

namespace serial {

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.dim() != b.dim()) throw SizeError("mat_mul: dim mismatch");
  std::map<std::pair<std::size_t, std::size_t>, QPoly> acc;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    for (const auto& aik : a.column(k)) {
      for (std::size_t j = 0; j < b.dim(); ++j) {
        const QPoly bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        acc[{aik.row, j}] += aik.value * bkj;
      }
    }
  }
  PolyMatrix r(a.dim());
  for (auto& [idx, v] : acc) r.set(idx.first, idx.second, std::move(v));
  return r;
}

}  // namespace serial

}  // namespace gelfand
