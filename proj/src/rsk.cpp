#include "gelfand/rsk.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gelfand/errors.hpp"
#include "gelfand/model_hecke.hpp"
#include "gelfand/model_sn.hpp"

namespace gelfand {

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  int n = 0;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.empty()) throw std::invalid_argument("StandardTableau: empty row");
    if (r > 0 && row.size() > rows_[r - 1].size()) {
      throw std::invalid_argument("StandardTableau: row lengths must weakly decrease");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0 && row[c] <= row[c - 1]) throw std::invalid_argument("StandardTableau: rows must increase");
      if (r > 0 && row[c] <= rows_[r - 1][c]) {
        throw std::invalid_argument("StandardTableau: columns must increase");
      }
    }
    n += static_cast<int>(row.size());
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& row : rows_) {
    for (int v : row) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument("StandardTableau: entries must be exactly 1..n");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
}

StandardTableau StandardTableau::row_superstandard(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int part : shape.parts()) {
    std::vector<int> row;
    for (int c = 0; c < part; ++c) row.push_back(next++);
    rows.push_back(std::move(row));
  }
  return StandardTableau(std::move(rows));
}

Partition StandardTableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

int StandardTableau::size() const {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

int StandardTableau::row_of(int entry) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (std::find(rows_[r].begin(), rows_[r].end(), entry) != rows_[r].end()) return static_cast<int>(r);
  }
  throw std::out_of_range("StandardTableau::row_of: entry " + std::to_string(entry) + " not present");
}

std::string StandardTableau::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    os << (r ? "/" : "");
    for (std::size_t c = 0; c < rows_[r].size(); ++c) os << (c ? "," : "") << rows_[r][c];
  }
  return os.str();
}

std::pair<StandardTableau, StandardTableau> rs_insert(const Permutation& p) {
  std::vector<std::vector<int>> ins, rec;
  for (int i = 1; i <= p.size(); ++i) {
    int x = p(i);
    std::size_t r = 0;
    for (;; ++r) {
      if (r == ins.size()) {
        ins.push_back({x});
        rec.push_back({i});
        break;
      }
      auto& row = ins[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        rec[r].push_back(i);
        break;
      }
      std::swap(*it, x);
    }
  }
  return {StandardTableau(std::move(ins)), StandardTableau(std::move(rec))};
}

namespace {

void syt_rec(const Partition& shape, std::vector<std::vector<int>>& rows, int next,
             std::vector<StandardTableau>& out) {
  if (next > shape.size()) {
    out.emplace_back(rows);
    return;
  }
  for (int r = 0; r < shape.length(); ++r) {
    auto& row = rows[static_cast<std::size_t>(r)];
    if (static_cast<int>(row.size()) == shape[r]) continue;
    if (r > 0 && rows[static_cast<std::size_t>(r - 1)].size() <= row.size()) continue;
    row.push_back(next);
    syt_rec(shape, rows, next + 1, out);
    row.pop_back();
  }
}

}  // namespace

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
  syt_rec(shape, rows, 1, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t hook_length_count(const Partition& shape) {
  const Partition conj = shape.conjugate();
  std::int64_t numerator = 1;
  for (int i = 2; i <= shape.size(); ++i) numerator *= i;
  std::int64_t hooks = 1;
  for (int r = 0; r < shape.length(); ++r) {
    for (int c = 0; c < shape[r]; ++c) hooks *= (shape[r] - c - 1) + (conj[c] - r - 1) + 1;
  }
  return numerator / hooks;
}

std::vector<int> tableau_descent_set(const StandardTableau& q) {
  std::vector<int> des;
  for (int i = 1; i < q.size(); ++i) {
    if (q.row_of(i + 1) > q.row_of(i)) des.push_back(i);
  }
  return des;
}

int odd_columns(const Partition& shape) {
  int count = 0;
  const Partition columns = shape.conjugate();
  for (int height : columns.parts()) count += height % 2;
  return count;
}

QPoly irreducible_hecke_character(const Partition& lambda, const Partition& mu,
                                  const std::optional<StandardTableau>& p_lambda) {
  if (lambda.size() != mu.size()) throw SizeError("irreducible_hecke_character: |lambda| != |mu|");
  const StandardTableau p = p_lambda.value_or(StandardTableau::row_superstandard(lambda));
  if (p.shape() != lambda) throw std::invalid_argument("irreducible_hecke_character: P has the wrong shape");
  const QPoly minus_q = -QPoly::q();
  QPoly total;
  for (const auto& w : all_permutations(lambda.size())) {
    if (!is_mu_unimodal(w, mu)) continue;
    if (rs_insert(w).first != p) continue;
    total += pow(minus_q, mu_descent_number(w, mu));
  }
  return total;
}

namespace {

// Characters via beta-sets: removing an r-border strip moves one bead from b
// to b - r (unoccupied); the sign is (-1)^{beads strictly between}.
using BetaSet = std::vector<int>;  // strictly decreasing

std::int64_t mn_rec(const BetaSet& beta, const std::vector<int>& cycles, std::size_t next,
                    std::map<std::pair<BetaSet, std::size_t>, std::int64_t>& memo) {
  if (next == cycles.size()) return 1;
  const auto key = std::make_pair(beta, next);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int r = cycles[next];
  std::int64_t total = 0;
  for (std::size_t b = 0; b < beta.size(); ++b) {
    const int target = beta[b] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int x : beta) between += (x > target && x < beta[b]) ? 1 : 0;
    BetaSet moved = beta;
    moved[b] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    const std::int64_t sub = mn_rec(moved, cycles, next + 1, memo);
    total += between % 2 == 0 ? sub : -sub;
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw SizeError("mn_character: |lambda| != |mu|");
  const int len = lambda.length();
  BetaSet beta;
  for (int i = 0; i < len; ++i) beta.push_back(lambda[i] + (len - 1 - i));
  std::vector<int> cycles(mu.parts().begin(), mu.parts().end());
  std::map<std::pair<BetaSet, std::size_t>, std::int64_t> memo;
  return mn_rec(beta, cycles, 0, memo);
}

Report involution_fixedpoint_vs_oddcolumns(int n) {
  if (n > kOddColumnsCap) {
    throw CapacityError("odd-column count: n=" + std::to_string(n) + " exceeds cap " +
                        std::to_string(kOddColumnsCap));
  }
  Report report{"odd_columns", n, {}, nlohmann::json::object()};
  CheckBuilder check("fixed_points_vs_odd_columns");
  const auto involutions = enumerate_involutions(n);
  std::vector<std::int64_t> tableaux_by_odd(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& lambda : partitions_of(n)) {
    tableaux_by_odd[static_cast<std::size_t>(odd_columns(lambda))] +=
        static_cast<std::int64_t>(enumerate_syt(lambda).size());
  }
  nlohmann::json rows = nlohmann::json::array();
  for (int k = 0; 2 * k <= n; ++k) {
    const auto involution_count = std::count_if(involutions.begin(), involutions.end(),
                                                [&](const Involution& w) { return w.k() == k; });
    const std::int64_t tableau_count = tableaux_by_odd[static_cast<std::size_t>(n - 2 * k)];
    check.expect(involution_count == tableau_count,
                 "n=" + std::to_string(n) + " k=" + std::to_string(k) + " involutions=" +
                     std::to_string(involution_count) + " tableaux=" + std::to_string(tableau_count));
    rows.push_back({{"k", k}, {"involutions", involution_count}, {"tableaux", tableau_count}});
  }
  report.checks.push_back(check.finish());
  report.data["counts"] = std::move(rows);
  return report;
}

Check check_rs_properties(int n) {
  CheckBuilder check("rs_properties");
  const auto w_label = [&](const Permutation& w) { return "n=" + std::to_string(n) + " w=" + window_string(w); };
  std::set<std::pair<StandardTableau, StandardTableau>> images;
  for (const auto& w : all_permutations(n)) {
    const auto [p, q] = rs_insert(w);
    check.expect_lazy(p.shape() == q.shape(), [&] { return w_label(w) + " shapes differ"; });
    check.expect_lazy(images.emplace(p, q).second, [&] { return w_label(w) + " not injective"; });
    check.expect_lazy(w.is_involution() == (p == q), [&] { return w_label(w) + " involution criterion"; });
    check.expect_lazy(descent_set(w) == tableau_descent_set(q), [&] { return w_label(w) + " descent set"; });
    const auto [pi, qi] = rs_insert(w.inverse());
    check.expect_lazy(pi == q && qi == p, [&] { return w_label(w) + " inverse symmetry"; });
  }
  std::int64_t tableaux = 0;
  for (const auto& lambda : partitions_of(n)) {
    const auto count = static_cast<std::int64_t>(enumerate_syt(lambda).size());
    check.expect_lazy(count == hook_length_count(lambda),
                      [&] { return "n=" + std::to_string(n) + " hook length " + lambda.to_string(); });
    tableaux += count;
  }
  check.expect(tableaux == static_cast<std::int64_t>(enumerate_involutions(n).size()),
               "n=" + std::to_string(n) + " SYT count != involution count");
  return check.finish();
}

Check check_irreducible_sum(int n) {
  CheckBuilder check("irreducible_characters");
  const ModelBasis basis(n);
  const auto parts = partitions_of(n);
  const auto label = [&](const std::string& what) { return "n=" + std::to_string(n) + " " + what; };
  for (const auto& mu : parts) {
    QPoly sum;
    std::int64_t classical_sum = 0;
    for (const auto& lambda : parts) {
      const QPoly chi = irreducible_hecke_character(lambda, mu);
      sum += chi;
      for (const auto& p : enumerate_syt(lambda)) {
        check.expect_lazy(irreducible_hecke_character(lambda, mu, p) == chi, [&] {
          return label("P-dependence lambda=" + lambda.to_string() + " mu=" + mu.to_string() + " P=" + p.to_string());
        });
      }
      const std::int64_t classical = mn_character(lambda, mu);
      classical_sum += classical;
      check.expect_lazy(chi.eval(std::int64_t{1}) == classical, [&] {
        return label("q=1 lambda=" + lambda.to_string() + " mu=" + mu.to_string());
      });
    }
    const QPoly trace = hecke_model_character(mu, basis);
    check.expect_lazy(sum == trace, [&] {
      return label("mu=" + mu.to_string() + " sum=" + sum.to_string() + " trace=" + trace.to_string());
    });
    check.expect_lazy(classical_sum == square_roots_count(consecutive_cycles(mu)), [&] {
      return label("Frobenius-Schur at class " + mu.to_string());
    });
  }
  std::int64_t regular = 0;
  std::int64_t factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= i;
  for (const auto& lambda : parts) regular += mn_character(lambda, Partition::ones(n)) * hook_length_count(lambda);
  check.expect(regular == factorial, label("sum of squared degrees"));
  return check.finish();
}

Report verify_rsk(int n, int cap) {
  if (n < 1) throw std::invalid_argument("verify_rsk: n >= 1 required");
  if (n > cap) {
    throw CapacityError("verify rsk: n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  Report report{"rsk", n, {}, nlohmann::json::object()};
  report.checks.push_back(check_rs_properties(n));
  const Report odd = involution_fixedpoint_vs_oddcolumns(n);
  report.checks.insert(report.checks.end(), odd.checks.begin(), odd.checks.end());
  report.data["odd_columns"] = odd.data.at("counts");
  if (n <= kRsCharacterCap) report.checks.push_back(check_irreducible_sum(n));
  return report;
}

}  // namespace gelfand
