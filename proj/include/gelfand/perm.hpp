#pragma once

// Permutation combinatorics for the symmetric group S_n.
//
// All positions and values are 1-based: a Permutation of size n stores its
// window (one-line form) w(1) w(2) ... w(n). Generators s_i (1 <= i < n)
// swap i and i+1. Composition is functional: (p * r)(i) = p(r(i)).

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gelfand {

/// An unordered pair {first, second} with first < second.
using Pair = std::pair<int, int>;

class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `window` is a bijection on {1..n}.
  explicit Permutation(std::vector<int> window);

  static Permutation identity(int n);
  /// The Coxeter generator s_i of S_n.
  static Permutation generator(int n, int i);

  int size() const { return static_cast<int>(window_.size()); }
  /// Image of the 1-based point i.
  int operator()(int i) const { return window_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> window() const { return window_; }

  Permutation inverse() const;
  bool is_identity() const;
  bool is_involution() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> window_;
};

/// Weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// Sorts arbitrary positive parts into canonical (decreasing) order.
  static Partition from_unsorted(std::vector<int> parts);
  /// (1, 1, ..., 1) of size n.
  static Partition ones(int n);

  int size() const { return total_; }
  int length() const { return static_cast<int>(parts_.size()); }
  std::span<const int> parts() const { return parts_; }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

  /// d[r] = number of parts equal to r, for r = 0..n (d[0] unused, always 0).
  std::vector<int> multiplicities() const;
  /// mu_1, mu_1 + mu_2, ..., mu_1 + ... + mu_{t-1}: the interior block boundaries.
  std::vector<int> partial_sums() const;
  Partition conjugate() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// A permutation w with w^2 = id, together with its 2-cycles and fixed points.
class Involution {
 public:
  Involution() = default;
  /// Throws std::invalid_argument if `perm` is not an involution.
  explicit Involution(Permutation perm);

  const Permutation& perm() const { return perm_; }
  int size() const { return perm_.size(); }
  int operator()(int i) const { return perm_(i); }
  /// 2-cycles {a, b}, a < b, sorted by a.
  const std::vector<Pair>& pairs() const { return pairs_; }
  std::vector<int> fixed_points() const;
  /// Number of 2-cycles.
  int k() const { return static_cast<int>(pairs_.size()); }
  bool has_pair(int a, int b) const;

  friend bool operator==(const Involution& a, const Involution& b) { return a.perm_ == b.perm_; }
  friend auto operator<=>(const Involution& a, const Involution& b) { return a.perm_ <=> b.perm_; }

 private:
  Permutation perm_;
  std::vector<Pair> pairs_;
};

/// result(i) = p(r(i)). Throws SizeError on mismatched n.
Permutation compose(const Permutation& p, const Permutation& r);
inline Permutation operator*(const Permutation& p, const Permutation& r) { return compose(p, r); }

/// p w p^{-1}.
Permutation conjugate(const Permutation& p, const Permutation& w);
Involution conjugate(const Permutation& p, const Involution& w);

/// Coxeter length, computed as the number of inversions.
int length(const Permutation& p);
/// All {i, j}, i < j, with p(i) > p(j), sorted lexicographically.
std::vector<Pair> inversion_set(const Permutation& p);
/// Generator indices i with p(i) > p(i+1), ascending.
std::vector<int> descent_set(const Permutation& p);
bool has_descent(const Permutation& p, int i);
/// Non-fixed points, ascending.
std::vector<int> support(const Permutation& p);
Partition cycle_type(const Permutation& p);
/// Cycle notation with singletons omitted; the identity renders as "id".
std::string cycle_string(const Permutation& p);
std::string window_string(const Permutation& p);

/// All of S_n in lexicographic window order.
std::vector<Permutation> all_permutations(int n);
/// All partitions of n, in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

/// All involutions of S_n in lexicographic window order.
std::vector<Involution> enumerate_involutions(int n);

inline constexpr int kSquareRootCap = 9;
/// #{u in S_n : u * u = p} by exhaustive enumeration (parallel over the value of u(1)).
/// Throws CapacityError for n > kSquareRootCap.
std::int64_t square_roots_count(const Permutation& p);

/// True iff each mu-block of the window strictly rises and then strictly falls.
/// Throws std::invalid_argument if mu is not a partition of p.size().
bool is_mu_unimodal(const Permutation& p, const Partition& mu);

/// The permutation (1..r)(r+1..2r)... built from consecutive blocks of the given lengths.
Permutation consecutive_cycles(const Partition& lambda);
/// One representative per partition of n, in partitions_of order.
std::vector<std::pair<Partition, Permutation>> conjugacy_class_reps(int n);

namespace serial {
/// Single-threaded reference for gelfand::square_roots_count.
std::int64_t square_roots_count(const Permutation& p);
}  // namespace serial

}  // namespace gelfand
