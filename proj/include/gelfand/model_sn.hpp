#pragma once

// The signed-conjugation model of S_n on the span of its involutions.
//
// rho(s) C_w = sign(s; w) C_{sws}, where the sign is -1 exactly when s fixes w
// under conjugation and s is a descent of w. For a general permutation p,
// rho(p) C_w = (-1)^{inv_w(p)} C_{p w p^-1}, with inv_w(p) the number of
// inversions of p that are 2-cycles of w.

#include <cstdint>
#include <map>
#include <vector>

#include "gelfand/perm.hpp"
#include "gelfand/report.hpp"
#include "gelfand/signed_matrix.hpp"

namespace gelfand {

/// The involutions of S_n in canonical (lexicographic) order, indexing the model basis.
class ModelBasis {
 public:
  explicit ModelBasis(int n);

  int n() const { return n_; }
  std::size_t size() const { return involutions_.size(); }
  const std::vector<Involution>& involutions() const { return involutions_; }
  const Involution& operator[](std::size_t i) const { return involutions_[i]; }
  /// Position of w. Throws std::out_of_range if w is not an involution of S_n.
  std::size_t index_of(const Permutation& w) const;
  std::size_t index_of(const Involution& w) const { return index_of(w.perm()); }

 private:
  int n_;
  std::vector<Involution> involutions_;
  std::map<Permutation, std::size_t> index_;
};

/// #(Inv(p) intersect Pair(w)).
int inv_w(const Permutation& p, const Involution& w);

/// +1 or -1 by the generator rule; 1 <= i <= n-1.
int sign_of_generator(int i, const Involution& w);

/// rho(s_i) built column by column from the generator sign rule.
SignedPermMatrix rho_generator(int i, const ModelBasis& basis);
/// rho(p) from the closed inv_w form.
SignedPermMatrix rho_matrix(const Permutation& p, const ModelBasis& basis);

/// Sum of (-1)^{inv_w(p)} over involutions w commuting with p.
std::int64_t rho_character(const Permutation& p, const ModelBasis& basis);

/// Product over r of the three-case factor f(r, d_r). `d[r]` is the number of
/// r-cycles (d[0] ignored); requires sum r * d[r] = n.
std::int64_t fs_count_formula(const std::vector<int>& d);
/// The factor f(r, d).
std::int64_t fs_factor(int r, int d);

/// Orbit of w under conjugation by <s_i, s_{i+1}>, sorted. Requires 1 <= i <= n-2.
std::vector<Involution> orbit_under_pair(int i, const Involution& w);

inline constexpr int kSnVerifyCap = 7;
inline constexpr int kSnHomomorphismAllPairsCap = 5;

struct SnVerifyOptions {
  int cap = kSnVerifyCap;
  std::uint64_t seed = 20240607;
  /// Random (sigma, pi) pairs for the homomorphism check above the all-pairs cap.
  int random_pairs = 300;
  /// Random (sigma, pi, w) triples for the sign cocycle check.
  int cocycle_triples = 1000;
};

/// Generator relations, homomorphism, sign cocycle, orbit taxonomy and the
/// per-class character identities trace = #square roots = product formula.
/// Throws CapacityError when n exceeds options.cap.
Report verify_sn_model(int n, const SnVerifyOptions& options = {});

/// Named pieces of verify_sn_model, exposed for the acceptance suite.
Check check_sn_relations(const ModelBasis& basis);
Check check_sign_cocycle(int n, int triples, std::uint64_t seed);
Check check_orbit_sizes(int n);
Check check_descent_equivalence(int n);

/// One row of the S_n character table of the model.
struct SnClassCharacter {
  Partition cycle_type;
  Permutation representative;
  std::int64_t trace = 0;          // trace of rho_matrix
  std::int64_t character = 0;      // rho_character
  std::int64_t square_roots = 0;   // brute force
  std::int64_t formula = 0;        // fs_count_formula
  bool matches() const {
    return trace == character && character == square_roots && square_roots == formula;
  }
};

/// All classes of S_n, computed in parallel across classes.
std::vector<SnClassCharacter> sn_class_characters(const ModelBasis& basis);

}  // namespace gelfand
