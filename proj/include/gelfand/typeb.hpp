#pragma once

// The signed-conjugation model of the hyperoctahedral group B_n.
//
// Elements are signed windows: w(i) in {+-1, ..., +-n} with |w| a permutation,
// extended by w(-i) = -w(i). Generators are s_0 (negates position 1) and
// s_1..s_{n-1} (swap positions i and i+1).

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gelfand/perm.hpp"
#include "gelfand/report.hpp"
#include "gelfand/signed_matrix.hpp"

namespace gelfand {

class SignedPermutation {
 public:
  SignedPermutation() = default;
  /// Throws std::invalid_argument unless the absolute values form a permutation of 1..n.
  explicit SignedPermutation(std::vector<int> window);

  static SignedPermutation identity(int n);
  /// s_0 for i = 0, otherwise the transposition of positions i, i+1.
  static SignedPermutation generator(int n, int i);

  int size() const { return static_cast<int>(window_.size()); }
  /// Image of +-i.
  int operator()(int i) const;
  std::span<const int> window() const { return window_; }
  /// The underlying unsigned permutation |w|.
  Permutation abs() const;

  SignedPermutation inverse() const;
  bool is_identity() const;
  bool is_involution() const;
  std::string to_string() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> window_;
};

/// (p r)(i) = p(r(i)). Throws SizeError on mismatched n.
SignedPermutation b_compose(const SignedPermutation& p, const SignedPermutation& r);
inline SignedPermutation operator*(const SignedPermutation& p, const SignedPermutation& r) {
  return b_compose(p, r);
}
inline SignedPermutation b_inverse(const SignedPermutation& p) { return p.inverse(); }
SignedPermutation b_conjugate(const SignedPermutation& g, const SignedPermutation& w);

/// All 2^n n! elements in lexicographic window order.
std::vector<SignedPermutation> b_elements(int n);
/// Involutions in lexicographic window order.
std::vector<SignedPermutation> b_involutions(int n);

/// 0 if w(1) < 0; i >= 1 if w(i) > w(i+1).
std::vector<int> b_descent_set(const SignedPermutation& w);

/// #{u : u u = g}, by enumeration.
std::int64_t b_square_roots_count(const SignedPermutation& g);

class BBasis {
 public:
  explicit BBasis(int n);
  int n() const { return n_; }
  std::size_t size() const { return involutions_.size(); }
  const SignedPermutation& operator[](std::size_t i) const { return involutions_[i]; }
  const std::vector<SignedPermutation>& involutions() const { return involutions_; }
  std::size_t index_of(const SignedPermutation& w) const;

 private:
  int n_;
  std::vector<SignedPermutation> involutions_;
  std::map<SignedPermutation, std::size_t> index_;
};

/// C_w -> sign * C_{s w s}; the s_0 sign uses Des(w), the others Des(|w|).
SignedPermMatrix rho_b_generator(int i, const BBasis& basis);

/// Shortest generator word for every element (breadth-first, generators tried 0..n-1).
std::map<SignedPermutation, std::vector<int>> b_shortest_words(int n);
/// Product of generator matrices along `word`.
SignedPermMatrix rho_b_of_word(const std::vector<int>& word, const std::vector<SignedPermMatrix>& gens,
                               std::size_t dim);

/// Lexicographically smallest element of each conjugacy class.
std::vector<SignedPermutation> b_conjugacy_class_reps(int n);

inline constexpr int kTypeBVerifyCap = 4;
inline constexpr int kTypeBAllElementsCap = 3;

/// Coxeter relations, and trace = #square roots on every element (n <= 3) or
/// on class representatives. Throws CapacityError beyond `cap`.
Report verify_b_model(int n, int cap = kTypeBVerifyCap);

}  // namespace gelfand
