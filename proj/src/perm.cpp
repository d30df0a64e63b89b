#include "gelfand/perm.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gelfand/errors.hpp"

namespace gelfand {

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : window_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation window: " + window_string(*this));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::generator(int n, int i) {
  if (i < 1 || i >= n) {
    throw std::invalid_argument("generator index " + std::to_string(i) + " out of range for n=" +
                                std::to_string(n));
  }
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(window_.size());
  for (std::size_t i = 0; i < window_.size(); ++i) {
    inv[static_cast<std::size_t>(window_[i] - 1)] = static_cast<int>(i) + 1;
  }
  Permutation r;
  r.window_ = std::move(inv);
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (window_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

bool Permutation::is_involution() const {
  for (int i = 1; i <= size(); ++i) {
    if ((*this)((*this)(i)) != i) return false;
  }
  return true;
}

// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    total_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

std::vector<int> Partition::multiplicities() const {
  std::vector<int> d(static_cast<std::size_t>(total_) + 1, 0);
  for (int part : parts_) ++d[static_cast<std::size_t>(part)];
  return d;
}

std::vector<int> Partition::partial_sums() const {
  std::vector<int> sums;
  int acc = 0;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    acc += parts_[i];
    sums.push_back(acc);
  }
  return sums;
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  if (!parts_.empty()) {
    for (int c = 1; c <= parts_.front(); ++c) {
      int height = 0;
      for (int part : parts_) height += part >= c ? 1 : 0;
      cols.push_back(height);
    }
  }
  return Partition(std::move(cols));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

// Involution

Involution::Involution(Permutation perm) : perm_(std::move(perm)) {
  if (!perm_.is_involution()) {
    throw std::invalid_argument("not an involution: " + window_string(perm_));
  }
  for (int i = 1; i <= perm_.size(); ++i) {
    if (perm_(i) > i) pairs_.emplace_back(i, perm_(i));
  }
}

std::vector<int> Involution::fixed_points() const {
  std::vector<int> fixed;
  for (int i = 1; i <= size(); ++i) {
    if (perm_(i) == i) fixed.push_back(i);
  }
  return fixed;
}

bool Involution::has_pair(int a, int b) const { return a != b && perm_(a) == b; }

// Free functions

Permutation compose(const Permutation& p, const Permutation& r) {
  if (p.size() != r.size()) {
    throw SizeError("compose: sizes " + std::to_string(p.size()) + " and " +
                    std::to_string(r.size()));
  }
  std::vector<int> w(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) w[static_cast<std::size_t>(i - 1)] = p(r(i));
  return Permutation(std::move(w));
}

Permutation conjugate(const Permutation& p, const Permutation& w) {
  if (p.size() != w.size()) throw SizeError("conjugate: size mismatch");
  // (p w p^{-1})(p(i)) = p(w(i))
  std::vector<int> r(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) r[static_cast<std::size_t>(p(i) - 1)] = p(w(i));
  return Permutation(std::move(r));
}

Involution conjugate(const Permutation& p, const Involution& w) {
  return Involution(conjugate(p, w.perm()));
}

int length(const Permutation& p) {
  int count = 0;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) count += p(i) > p(j) ? 1 : 0;
  }
  return count;
}

std::vector<Pair> inversion_set(const Permutation& p) {
  std::vector<Pair> inv;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) {
      if (p(i) > p(j)) inv.emplace_back(i, j);
    }
  }
  return inv;
}

std::vector<int> descent_set(const Permutation& p) {
  std::vector<int> des;
  for (int i = 1; i < p.size(); ++i) {
    if (p(i) > p(i + 1)) des.push_back(i);
  }
  return des;
}

bool has_descent(const Permutation& p, int i) { return i >= 1 && i < p.size() && p(i) > p(i + 1); }

std::vector<int> support(const Permutation& p) {
  std::vector<int> supp;
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) != i) supp.push_back(i);
  }
  return supp;
}

namespace {

std::vector<std::vector<int>> cycles_of(const Permutation& p) {
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(static_cast<std::size_t>(p.size()) + 1, false);
  for (int start = 1; start <= p.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = p(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace

Partition cycle_type(const Permutation& p) {
  std::vector<int> lengths;
  for (const auto& c : cycles_of(p)) lengths.push_back(static_cast<int>(c.size()));
  return Partition::from_unsorted(std::move(lengths));
}

std::string cycle_string(const Permutation& p) {
  std::ostringstream os;
  for (const auto& c : cycles_of(p)) {
    if (c.size() < 2) continue;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "id" : s;
}

std::string window_string(const Permutation& p) {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= p.size(); ++i) os << (i > 1 ? "," : "") << p(i);
  os << ']';
  return os.str();
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> all;
  do {
    all.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return all;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

// Fills the smallest unassigned position either with itself or with a larger
// unassigned partner, in increasing order of the value placed there. This
// visits involutions in lexicographic window order.
void involutions_rec(std::vector<int>& w, int pos, std::vector<Involution>& out) {
  const int n = static_cast<int>(w.size());
  while (pos <= n && w[static_cast<std::size_t>(pos - 1)] != 0) ++pos;
  if (pos > n) {
    out.emplace_back(Permutation(w));
    return;
  }
  w[static_cast<std::size_t>(pos - 1)] = pos;
  involutions_rec(w, pos + 1, out);
  for (int j = pos + 1; j <= n; ++j) {
    if (w[static_cast<std::size_t>(j - 1)] != 0) continue;
    w[static_cast<std::size_t>(pos - 1)] = j;
    w[static_cast<std::size_t>(j - 1)] = pos;
    involutions_rec(w, pos + 1, out);
    w[static_cast<std::size_t>(j - 1)] = 0;
  }
  w[static_cast<std::size_t>(pos - 1)] = 0;
}

bool squares_to(const std::vector<int>& u, const Permutation& p) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[static_cast<std::size_t>(u[i] - 1)] != p(static_cast<int>(i) + 1)) return false;
  }
  return true;
}

void check_square_root_cap(const Permutation& p) {
  if (p.size() > kSquareRootCap) {
    throw CapacityError("square_roots_count: n=" + std::to_string(p.size()) + " exceeds cap " +
                        std::to_string(kSquareRootCap));
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::vector<Involution> enumerate_involutions(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_involutions: n must be positive");
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  std::vector<Involution> out;
  involutions_rec(w, 1, out);
  return out;
}

std::int64_t square_roots_count(const Permutation& p) {
  check_square_root_cap(p);
  const int n = p.size();
  if (n == 0) return 1;
  std::int64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
  for (int first = 1; first <= n; ++first) {
    std::vector<int> u(static_cast<std::size_t>(n));
    u[0] = first;
    int slot = 1;
    for (int v = 1; v <= n; ++v) {
      if (v != first) u[static_cast<std::size_t>(slot++)] = v;
    }
    do {
      if (squares_to(u, p)) ++total;
    } while (std::next_permutation(u.begin() + 1, u.end()));
  }
  return total;
}

namespace serial {

std::int64_t square_roots_count(const Permutation& p) {
  check_square_root_cap(p);
  std::int64_t total = 0;
  for (const auto& u : all_permutations(p.size())) {
    if (compose(u, u) == p) ++total;
  }
  return total;
}

}  // namespace serial

bool is_mu_unimodal(const Permutation& p, const Partition& mu) {
  if (mu.size() != p.size()) {
    throw std::invalid_argument("is_mu_unimodal: mu is a partition of " +
                                std::to_string(mu.size()) + ", not " + std::to_string(p.size()));
  }
  int start = 1;
  for (int part : mu.parts()) {
    const int end = start + part - 1;
    int peak = start;
    while (peak < end && p(peak) < p(peak + 1)) ++peak;
    for (int i = peak; i < end; ++i) {
      if (p(i) < p(i + 1)) return false;
    }
    start = end + 1;
  }
  return true;
}

Permutation consecutive_cycles(const Partition& lambda) {
  std::vector<int> w(static_cast<std::size_t>(lambda.size()));
  int start = 1;
  for (int r : lambda.parts()) {
    for (int j = 0; j < r; ++j) {
      const int pos = start + j;
      w[static_cast<std::size_t>(pos - 1)] = start + (j + 1) % r;
    }
    start += r;
  }
  return Permutation(std::move(w));
}

std::vector<std::pair<Partition, Permutation>> conjugacy_class_reps(int n) {
  std::vector<std::pair<Partition, Permutation>> reps;
  for (auto& lambda : partitions_of(n)) {
    Permutation rep = consecutive_cycles(lambda);
    reps.emplace_back(std::move(lambda), std::move(rep));
  }
  return reps;
}

}  // namespace gelfand
