#pragma once

// Robinson-Schensted row insertion and the character oracles built on it.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gelfand/perm.hpp"
#include "gelfand/qpoly.hpp"
#include "gelfand/report.hpp"

namespace gelfand {

class StandardTableau {
 public:
  StandardTableau() = default;
  /// Throws std::invalid_argument unless rows and columns strictly increase,
  /// row lengths weakly decrease, and the entries are exactly 1..n.
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  /// Rows filled left to right, top to bottom with 1..n.
  static StandardTableau row_superstandard(const Partition& shape);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  /// 0-based row containing `entry`.
  int row_of(int entry) const;

  std::string to_string() const;

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
  friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// Insertion tableau P and recording tableau Q of the window of p.
std::pair<StandardTableau, StandardTableau> rs_insert(const Permutation& p);

/// All standard tableaux of the shape, in lexicographic order of their rows.
std::vector<StandardTableau> enumerate_syt(const Partition& shape);
/// n! / prod(hook lengths).
std::int64_t hook_length_count(const Partition& shape);

/// {i : i+1 lies in a strictly lower row than i}.
std::vector<int> tableau_descent_set(const StandardTableau& q);

/// Number of columns of odd height.
int odd_columns(const Partition& shape);

/// Sum over mu-unimodal w in S_n with insertion tableau `p_lambda` of
/// (-q)^{mu_descent_number(w, mu)}. Defaults to the row-superstandard tableau of lambda.
QPoly irreducible_hecke_character(const Partition& lambda, const Partition& mu,
                                  const std::optional<StandardTableau>& p_lambda = std::nullopt);

/// Classical character chi^lambda at the class of cycle type mu, by border-strip removal.
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

/// For each k: #{w in I_n with n - 2k fixed points} = #{SYT with n - 2k odd columns}.
Report involution_fixedpoint_vs_oddcolumns(int n);

inline constexpr int kRsVerifyCap = 6;
inline constexpr int kRsCharacterCap = 5;
inline constexpr int kOddColumnsCap = 8;

/// RS bijection, involution criterion, descent compatibility, inverse symmetry,
/// SYT counts, the odd-column count, and (n <= kRsCharacterCap) the character identities.
Report verify_rsk(int n, int cap = kRsVerifyCap);

/// Named pieces of verify_rsk.
Check check_rs_properties(int n);
Check check_irreducible_sum(int n);

}  // namespace gelfand
