#pragma once

// The q-deformed model of the Hecke algebra H_n(q) on the span of the involutions.
//
// Generators act by
//   T_s C_w = -q C_w                 if sws = w and s in Des(w)
//             C_w                    if sws = w and s not in Des(w)
//             (1 - q) C_w + q C_sws  if w <_I sws
//             C_sws                  if sws <_I w
// where <_I is the involutive weak order graded by the involutive length.

#include <cstdint>
#include <string>
#include <vector>

#include "gelfand/model_sn.hpp"
#include "gelfand/perm.hpp"
#include "gelfand/qpoly.hpp"
#include "gelfand/report.hpp"

namespace gelfand {

inline constexpr int kInvolutiveLengthOracleCap = 8;

/// Minimum Coxeter length of v with w = v (1,2)(3,4)...(2k-1,2k) v^{-1}, by
/// enumerating S_n. Throws CapacityError for n > kInvolutiveLengthOracleCap.
int involutive_length_oracle(const Involution& w);
/// The oracle for every basis element at once (one pass over S_n, parallel).
std::vector<int> involutive_length_oracle_table(const ModelBasis& basis);

/// Closed form: [sum of Supp(w) - C(2k+1, 2)] + [inv(w restricted to Supp(w)) - k] / 2.
int involutive_length(const Involution& w);

/// (1,2)(3,4)...(2k-1,2k) in S_n, the unique involution of its type with length zero.
Involution minimal_involution(int n, int k);

enum class OrderCase { fixed_descent, fixed_nondescent, up, down };
std::string to_string(OrderCase c);

/// Which branch of the generator action applies to C_w under T_i.
/// Throws InvariantError if s_i moves w without changing the involutive length by one.
OrderCase order_relation(const Involution& w, int i);

struct CoverEdge {
  std::size_t from;  // basis index, lower involutive length
  std::size_t to;    // basis index of s_i w s_i
  int generator;
  friend bool operator==(const CoverEdge&, const CoverEdge&) = default;
};

struct InvolutiveOrderData {
  int n = 0;
  std::vector<Involution> involutions;  // canonical order
  std::vector<int> lengths;             // involutive length per involution
  std::vector<CoverEdge> cover_edges;   // sorted by (from, to, generator)
};

InvolutiveOrderData build_involutive_order(const ModelBasis& basis);

/// Graphviz rendering: one cluster per cycle type, nodes labeled by cycle
/// notation and involutive length, one edge per cover labeled by generators.
std::string to_dot(const InvolutiveOrderData& order);

/// Matrix of T_i in the canonical basis; 1 <= i <= n-1.
PolyMatrix rho_q_generator(int i, const ModelBasis& basis);
/// T_1, ..., T_{n-1}.
std::vector<PolyMatrix> rho_q_generators(const ModelBasis& basis);

/// Generator indices 1..n-1 omitting the partial sums mu_1 + ... + mu_j (j < t).
std::vector<int> t_mu_word(const Partition& mu);
/// Ordered product of generator matrices; the empty word gives the identity.
PolyMatrix rho_q_of_word(const std::vector<int>& word, const ModelBasis& basis);
PolyMatrix rho_q_of_word(const std::vector<int>& word, const std::vector<PolyMatrix>& generators,
                         std::size_t dim);

/// Descents of w not at the block boundaries of mu.
int mu_descent_number(const Permutation& w, const Partition& mu);

/// Trace of the matrix of T_mu.
QPoly hecke_model_character(const Partition& mu, const ModelBasis& basis);
/// Sum over mu-unimodal involutions w of (-q)^{mu_descent_number(w, mu)}.
QPoly mu_unimodal_character(const Partition& mu);
/// Same sum with the full descent number des(w) in the exponent.
QPoly mu_unimodal_character_full_descents(const Partition& mu);

/// The 6x6 blocks of (T_i, T_{i+1}) on an orbit of order six, in the basis
/// w, s_i w s_i, s_{i+1} s_i w s_i s_{i+1}, s_i s_{i+1} s_i w s_i s_{i+1} s_i,
/// s_{i+1} w s_{i+1}, s_i s_{i+1} w s_{i+1} s_i with w the orbit minimum.
std::pair<PolyMatrix, PolyMatrix> expected_hexagon_blocks();

/// The block of `m` on the listed basis positions (rows and columns in that order).
PolyMatrix restrict_to(const PolyMatrix& m, const std::vector<std::size_t>& positions);

inline constexpr int kHeckeVerifyCap = 6;

struct HeckeVerifyOptions {
  int cap = kHeckeVerifyCap;
  /// Compare the closed-form involutive length against the enumeration oracle.
  bool oracle = true;
};

/// Exact relations over Z[q], q = 1 specialization, orbit fixtures and the
/// trace identity for every mu. Throws CapacityError beyond options.cap.
Report verify_hecke_model(int n, const HeckeVerifyOptions& options = {});

/// Named pieces of verify_hecke_model, exposed for the acceptance suite.
Check check_involutive_length(const ModelBasis& basis);
Check check_four_cases(const ModelBasis& basis);
Check check_hecke_relations(const ModelBasis& basis, const std::vector<PolyMatrix>& gens);
Check check_specialization(const ModelBasis& basis, const std::vector<PolyMatrix>& gens);
Check check_hecke_characters(const ModelBasis& basis, const std::vector<PolyMatrix>& gens,
                             nlohmann::json* table = nullptr);
/// Order-six orbits are hexagons with a unique minimum, order-three orbits are
/// chains, and the generator blocks on them match the expected fixtures.
Check check_orbit_shapes(const ModelBasis& basis, const std::vector<PolyMatrix>& gens);

namespace serial {
/// Single-threaded reference for gelfand::involutive_length_oracle_table.
std::vector<int> involutive_length_oracle_table(const ModelBasis& basis);
}  // namespace serial

}  // namespace gelfand
