#include "gelfand/model_hecke.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <exception>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "gelfand/errors.hpp"

namespace gelfand {

namespace {

std::string witness(int n, const std::string& what) {
  return "n=" + std::to_string(n) + " " + what;
}

void check_oracle_cap(int n) {
  if (n > kInvolutiveLengthOracleCap) {
    throw CapacityError("involutive length oracle: n=" + std::to_string(n) + " exceeds cap " +
                        std::to_string(kInvolutiveLengthOracleCap));
  }
}

// min-length table update for one conjugator v.
void relax(const Permutation& v, const ModelBasis& basis, const std::vector<Involution>& minimal,
           std::vector<int>& best) {
  const int len = length(v);
  for (const auto& m : minimal) {
    const std::size_t idx = basis.index_of(conjugate(v, m.perm()));
    best[idx] = std::min(best[idx], len);
  }
}

std::vector<Involution> minimal_involutions(int n) {
  std::vector<Involution> out;
  for (int k = 0; 2 * k <= n; ++k) out.push_back(minimal_involution(n, k));
  return out;
}

}  // namespace

Involution minimal_involution(int n, int k) {
  if (k < 0 || 2 * k > n) throw std::invalid_argument("minimal_involution: need 0 <= 2k <= n");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  for (int j = 0; j < k; ++j) std::swap(w[static_cast<std::size_t>(2 * j)], w[static_cast<std::size_t>(2 * j + 1)]);
  return Involution(Permutation(std::move(w)));
}

int involutive_length_oracle(const Involution& w) {
  check_oracle_cap(w.size());
  const Permutation base = minimal_involution(w.size(), w.k()).perm();
  int best = INT_MAX;
  for (const auto& v : all_permutations(w.size())) {
    if (conjugate(v, base) == w.perm()) best = std::min(best, length(v));
  }
  return best;
}

std::vector<int> involutive_length_oracle_table(const ModelBasis& basis) {
  const int n = basis.n();
  check_oracle_cap(n);
  const auto minimal = minimal_involutions(n);
  std::vector<int> best(basis.size(), INT_MAX);
  std::exception_ptr error;
#pragma omp parallel
  {
    std::vector<int> local(basis.size(), INT_MAX);
#pragma omp for schedule(dynamic)
    for (int first = 1; first <= n; ++first) {
      try {
        std::vector<int> v(static_cast<std::size_t>(n));
        v[0] = first;
        int slot = 1;
        for (int x = 1; x <= n; ++x) {
          if (x != first) v[static_cast<std::size_t>(slot++)] = x;
        }
        do {
          relax(Permutation(v), basis, minimal, local);
        } while (std::next_permutation(v.begin() + 1, v.end()));
      } catch (...) {
#pragma omp critical(gelfand_oracle_error)
        if (!error) error = std::current_exception();
      }
    }
#pragma omp critical(gelfand_oracle_merge)
    for (std::size_t i = 0; i < best.size(); ++i) best[i] = std::min(best[i], local[i]);
  }
  if (error) std::rethrow_exception(error);
  return best;
}

namespace serial {

std::vector<int> involutive_length_oracle_table(const ModelBasis& basis) {
  check_oracle_cap(basis.n());
  const auto minimal = minimal_involutions(basis.n());
  std::vector<int> best(basis.size(), INT_MAX);
  for (const auto& v : all_permutations(basis.n())) relax(v, basis, minimal, best);
  return best;
}

}  // namespace serial

int involutive_length(const Involution& w) {
  const auto supp = support(w.perm());
  const int k = w.k();
  const int supp_sum = std::accumulate(supp.begin(), supp.end(), 0);
  const int base = (2 * k + 1) * (2 * k) / 2;
  // w restricted to its support, relabelled to 1..2k: count its inversions.
  int inv = 0;
  for (std::size_t a = 0; a < supp.size(); ++a) {
    for (std::size_t b = a + 1; b < supp.size(); ++b) inv += w(supp[a]) > w(supp[b]) ? 1 : 0;
  }
  if ((inv - k) % 2 != 0) {
    throw InvariantError("involutive_length: odd inversion excess for " + cycle_string(w.perm()));
  }
  return (supp_sum - base) + (inv - k) / 2;
}

std::string to_string(OrderCase c) {
  switch (c) {
    case OrderCase::fixed_descent: return "fixed_descent";
    case OrderCase::fixed_nondescent: return "fixed_nondescent";
    case OrderCase::up: return "up";
    case OrderCase::down: return "down";
  }
  return "?";
}

OrderCase order_relation(const Involution& w, int i) {
  const Permutation s = Permutation::generator(w.size(), i);
  const Permutation moved = conjugate(s, w.perm());
  if (moved == w.perm()) {
    return has_descent(w.perm(), i) ? OrderCase::fixed_descent : OrderCase::fixed_nondescent;
  }
  const int diff = involutive_length(Involution(moved)) - involutive_length(w);
  if (diff == 1) return OrderCase::up;
  if (diff == -1) return OrderCase::down;
  throw InvariantError("order_relation: s_" + std::to_string(i) + " moves " +
                       cycle_string(w.perm()) + " with length change " + std::to_string(diff));
}

InvolutiveOrderData build_involutive_order(const ModelBasis& basis) {
  InvolutiveOrderData order;
  order.n = basis.n();
  order.involutions = basis.involutions();
  for (const auto& w : basis.involutions()) order.lengths.push_back(involutive_length(w));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (int i = 1; i < basis.n(); ++i) {
      if (order_relation(basis[j], i) != OrderCase::up) continue;
      const Permutation s = Permutation::generator(basis.n(), i);
      order.cover_edges.push_back({j, basis.index_of(conjugate(s, basis[j].perm())), i});
    }
  }
  std::sort(order.cover_edges.begin(), order.cover_edges.end(), [](const auto& a, const auto& b) {
    return std::tie(a.from, a.to, a.generator) < std::tie(b.from, b.to, b.generator);
  });
  return order;
}

std::string to_dot(const InvolutiveOrderData& order) {
  std::ostringstream os;
  os << "digraph involutive_weak_order {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  const int n = order.n;
  for (int k = 0; 2 * k <= n; ++k) {
    os << "  subgraph cluster_k" << k << " {\n";
    os << "    label=\"2^" << k << " 1^" << n - 2 * k << "\";\n";
    for (std::size_t j = 0; j < order.involutions.size(); ++j) {
      if (order.involutions[j].k() != k) continue;
      os << "    w" << j << " [label=\"" << cycle_string(order.involutions[j].perm())
         << "\\nlen=" << order.lengths[j] << "\"];\n";
    }
    os << "  }\n";
  }
  // Merge parallel edges (distinct generators producing the same cover).
  for (std::size_t e = 0; e < order.cover_edges.size();) {
    const auto& first = order.cover_edges[e];
    std::string label = "s_" + std::to_string(first.generator);
    std::size_t f = e + 1;
    for (; f < order.cover_edges.size() && order.cover_edges[f].from == first.from &&
           order.cover_edges[f].to == first.to;
         ++f) {
      label += ",s_" + std::to_string(order.cover_edges[f].generator);
    }
    os << "  w" << first.from << " -> w" << first.to << " [label=\"" << label << "\"];\n";
    e = f;
  }
  os << "}\n";
  return os.str();
}

PolyMatrix rho_q_generator(int i, const ModelBasis& basis) {
  const int n = basis.n();
  if (i < 1 || i >= n) throw std::invalid_argument("rho_q_generator: generator out of range");
  const Permutation s = Permutation::generator(n, i);
  const QPoly q = QPoly::q();
  PolyMatrix m(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Involution& w = basis[j];
    switch (order_relation(w, i)) {
      case OrderCase::fixed_descent: m.set(j, j, -q); break;
      case OrderCase::fixed_nondescent: m.set(j, j, QPoly(1)); break;
      case OrderCase::up:
        m.set(j, j, QPoly(1) - q);
        m.set(basis.index_of(conjugate(s, w.perm())), j, q);
        break;
      case OrderCase::down: m.set(basis.index_of(conjugate(s, w.perm())), j, QPoly(1)); break;
    }
  }
  return m;
}

std::vector<PolyMatrix> rho_q_generators(const ModelBasis& basis) {
  std::vector<PolyMatrix> gens(static_cast<std::size_t>(std::max(basis.n() - 1, 0)));
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (int i = 1; i < basis.n(); ++i) {
    try {
      gens[static_cast<std::size_t>(i - 1)] = rho_q_generator(i, basis);
    } catch (...) {
#pragma omp critical(gelfand_hecke_gens)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return gens;
}

std::vector<int> t_mu_word(const Partition& mu) {
  const auto cuts = mu.partial_sums();
  std::vector<int> word;
  for (int i = 1; i < mu.size(); ++i) {
    if (std::find(cuts.begin(), cuts.end(), i) == cuts.end()) word.push_back(i);
  }
  return word;
}

PolyMatrix rho_q_of_word(const std::vector<int>& word, const std::vector<PolyMatrix>& generators,
                         std::size_t dim) {
  std::vector<const PolyMatrix*> factors;
  for (int i : word) {
    if (i < 1 || static_cast<std::size_t>(i) > generators.size()) {
      throw std::invalid_argument("rho_q_of_word: generator index out of range");
    }
    factors.push_back(&generators[static_cast<std::size_t>(i - 1)]);
  }
  return mat_product(factors, dim);
}

PolyMatrix rho_q_of_word(const std::vector<int>& word, const ModelBasis& basis) {
  std::vector<PolyMatrix> gens(static_cast<std::size_t>(std::max(basis.n() - 1, 0)));
  for (int i : word) {
    if (i < 1 || i >= basis.n()) throw std::invalid_argument("rho_q_of_word: generator index out of range");
    auto& slot = gens[static_cast<std::size_t>(i - 1)];
    if (slot.dim() == 0) slot = rho_q_generator(i, basis);
  }
  return rho_q_of_word(word, gens, basis.size());
}

int mu_descent_number(const Permutation& w, const Partition& mu) {
  if (mu.size() != w.size()) throw SizeError("mu_descent_number: mu is not a partition of n");
  const auto cuts = mu.partial_sums();
  int count = 0;
  for (int i : descent_set(w)) count += std::find(cuts.begin(), cuts.end(), i) == cuts.end() ? 1 : 0;
  return count;
}

QPoly hecke_model_character(const Partition& mu, const ModelBasis& basis) {
  if (mu.size() != basis.n()) throw SizeError("hecke_model_character: mu is not a partition of n");
  return mat_trace(rho_q_of_word(t_mu_word(mu), basis));
}

QPoly mu_unimodal_character(const Partition& mu) {
  const QPoly minus_q = -QPoly::q();
  QPoly total;
  for (const auto& w : enumerate_involutions(mu.size())) {
    if (is_mu_unimodal(w.perm(), mu)) total += pow(minus_q, mu_descent_number(w.perm(), mu));
  }
  return total;
}

QPoly mu_unimodal_character_full_descents(const Partition& mu) {
  const QPoly minus_q = -QPoly::q();
  QPoly total;
  for (const auto& w : enumerate_involutions(mu.size())) {
    if (is_mu_unimodal(w.perm(), mu)) {
      total += pow(minus_q, static_cast<int>(descent_set(w.perm()).size()));
    }
  }
  return total;
}

std::pair<PolyMatrix, PolyMatrix> expected_hexagon_blocks() {
  const QPoly q = QPoly::q();
  const QPoly a = QPoly(1) - q;
  PolyMatrix ti(6), tj(6);
  // T_i pairs (0,1), (2,3), (4,5).
  for (std::size_t b : {0u, 2u, 4u}) {
    ti.set(b, b, a);
    ti.set(b, b + 1, QPoly(1));
    ti.set(b + 1, b, q);
  }
  // T_{i+1} pairs (0,4), (1,2), (5,3).
  tj.set(0, 0, a);
  tj.set(0, 4, QPoly(1));
  tj.set(4, 0, q);
  tj.set(1, 1, a);
  tj.set(1, 2, QPoly(1));
  tj.set(2, 1, q);
  tj.set(5, 5, a);
  tj.set(5, 3, QPoly(1));
  tj.set(3, 5, q);
  return {ti, tj};
}

PolyMatrix restrict_to(const PolyMatrix& m, const std::vector<std::size_t>& positions) {
  PolyMatrix block(positions.size());
  for (std::size_t c = 0; c < positions.size(); ++c) {
    for (std::size_t r = 0; r < positions.size(); ++r) block.set(r, c, m.at(positions[r], positions[c]));
  }
  return block;
}

// Verification

Check check_involutive_length(const ModelBasis& basis) {
  CheckBuilder check("involutive_length_formula_vs_oracle");
  const auto oracle = involutive_length_oracle_table(basis);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const int formula = involutive_length(basis[j]);
    check.expect_lazy(formula == oracle[j], [&] {
      return witness(basis.n(), "w=" + cycle_string(basis[j].perm()) + " formula=" +
                                    std::to_string(formula) + " oracle=" + std::to_string(oracle[j]));
    });
  }
  return check.finish();
}

Check check_four_cases(const ModelBasis& basis) {
  CheckBuilder check("four_case_exhaustive");
  for (const auto& w : basis.involutions()) {
    for (int i = 1; i < basis.n(); ++i) {
      try {
        order_relation(w, i);
        check.expect(true);
      } catch (const InvariantError& e) {
        check.fail(witness(basis.n(), e.what()));
      }
    }
  }
  return check.finish();
}

Check check_hecke_relations(const ModelBasis& basis, const std::vector<PolyMatrix>& gens) {
  const int n = basis.n();
  const QPoly q = QPoly::q();
  const PolyMatrix identity = PolyMatrix::identity(basis.size());
  CheckBuilder check("hecke_relations");
  for (int i = 1; i < n; ++i) {
    const auto& t = gens[static_cast<std::size_t>(i - 1)];
    // (T + q)(T - 1) = 0
    const PolyMatrix quad = mat_mul(t + q * identity, t - identity);
    check.expect_lazy(quad == PolyMatrix(basis.size()),
                      [&] { return witness(n, "quadratic T_" + std::to_string(i)); });
    for (int j = i + 1; j < n; ++j) {
      const auto& u = gens[static_cast<std::size_t>(j - 1)];
      if (j - i > 1) {
        check.expect_lazy(mat_mul(t, u) == mat_mul(u, t), [&] {
          return witness(n, "commute T_" + std::to_string(i) + " T_" + std::to_string(j));
        });
      } else {
        check.expect_lazy(mat_mul(mat_mul(t, u), t) == mat_mul(mat_mul(u, t), u), [&] {
          return witness(n, "braid T_" + std::to_string(i) + " T_" + std::to_string(j));
        });
      }
    }
  }
  return check.finish();
}

Check check_specialization(const ModelBasis& basis, const std::vector<PolyMatrix>& gens) {
  CheckBuilder check("specialization_q1");
  for (int i = 1; i < basis.n(); ++i) {
    check.expect_lazy(
        specialize(gens[static_cast<std::size_t>(i - 1)], 1) == rho_generator(i, basis).to_poly_matrix(),
        [&] { return witness(basis.n(), "T_" + std::to_string(i)); });
  }
  return check.finish();
}

Check check_hecke_characters(const ModelBasis& basis, const std::vector<PolyMatrix>& gens,
                             nlohmann::json* table) {
  CheckBuilder check("trace_equals_unimodal_sum");
  const auto mus = partitions_of(basis.n());
  std::vector<QPoly> traces(mus.size()), sums(mus.size()), literal(mus.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t m = 0; m < mus.size(); ++m) {
    try {
      traces[m] = mat_trace(rho_q_of_word(t_mu_word(mus[m]), gens, basis.size()));
      sums[m] = mu_unimodal_character(mus[m]);
      literal[m] = mu_unimodal_character_full_descents(mus[m]);
    } catch (...) {
#pragma omp critical(gelfand_hecke_chars)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  for (std::size_t m = 0; m < mus.size(); ++m) {
    check.expect_lazy(traces[m] == sums[m], [&] {
      return witness(basis.n(), "mu=" + mus[m].to_string() + " trace=" + traces[m].to_string() +
                                    " sum=" + sums[m].to_string());
    });
    if (table != nullptr) {
      table->push_back({{"mu", mus[m].to_string()},
                        {"trace", traces[m].to_string()},
                        {"unimodal_sum", sums[m].to_string()},
                        {"full_descent_sum", literal[m].to_string()}});
    }
  }
  return check.finish();
}

Check check_orbit_shapes(const ModelBasis& basis, const std::vector<PolyMatrix>& gens) {
  const int n = basis.n();
  CheckBuilder check("orbit_shapes_and_blocks");
  const auto [hex_i, hex_j] = expected_hexagon_blocks();
  const QPoly q = QPoly::q();
  std::vector<int> len;
  for (const auto& w : basis.involutions()) len.push_back(involutive_length(w));

  for (int i = 1; i + 1 < n; ++i) {
    const Permutation s = Permutation::generator(n, i);
    const Permutation t = Permutation::generator(n, i + 1);
    const auto& ti = gens[static_cast<std::size_t>(i - 1)];
    const auto& tj = gens[static_cast<std::size_t>(i)];
    std::set<std::size_t> done;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (done.count(j) != 0) continue;
      const auto orbit = orbit_under_pair(i, basis[j]);
      std::vector<std::size_t> members;
      for (const auto& v : orbit) members.push_back(basis.index_of(v));
      done.insert(members.begin(), members.end());
      const auto label = [&] { return witness(n, "i=" + std::to_string(i) + " w=" + cycle_string(basis[j].perm())); };

      if (orbit.size() == 1) continue;
      // Unique minimum of the involutive length.
      const std::size_t bottom = *std::min_element(members.begin(), members.end(),
                                                   [&](auto a, auto b) { return len[a] < len[b]; });
      const int low = len[bottom];
      const auto minima = std::count_if(members.begin(), members.end(), [&](auto m) { return len[m] == low; });
      if (!check.expect_lazy(minima == 1, label)) continue;
      const Permutation& w = basis[bottom].perm();
      const auto at = [&](const Permutation& g) { return basis.index_of(conjugate(g, w)); };

      if (orbit.size() == 6) {
        const std::vector<std::size_t> order = {bottom,        at(s),     at(t * s), at(s * t * s),
                                                at(t),         at(s * t)};
        const std::vector<int> expected = {0, 1, 2, 3, 1, 2};
        bool shape = std::set<std::size_t>(order.begin(), order.end()).size() == 6;
        for (std::size_t k = 0; shape && k < 6; ++k) shape = len[order[k]] == low + expected[k];
        if (!check.expect_lazy(shape, label)) continue;
        check.expect_lazy(restrict_to(ti, order) == hex_i && restrict_to(tj, order) == hex_j, label);
      } else if (orbit.size() == 3) {
        // Chain w < s w s < t s w s t, or the same with s and t exchanged.
        const bool via_s = conjugate(s, w) != w;
        const Permutation& first = via_s ? s : t;
        const Permutation& second = via_s ? t : s;
        const std::vector<std::size_t> order = {bottom, at(first), at(second * first)};
        bool chain = len[order[1]] == low + 1 && len[order[2]] == low + 2 &&
                     conjugate(second, w) == w && conjugate(first, basis[order[2]].perm()) == basis[order[2]].perm();
        if (!check.expect_lazy(chain, label)) continue;
        const QPoly x = ti.at(via_s ? order[2] : order[0], via_s ? order[2] : order[0]);
        const bool x_ok = x == QPoly(1) || x == -q;
        PolyMatrix moving(3), fixed(3);
        moving.set(0, 0, QPoly(1) - q);
        moving.set(0, 1, QPoly(1));
        moving.set(1, 0, q);
        moving.set(2, 2, x);
        fixed.set(0, 0, x);
        fixed.set(1, 1, QPoly(1) - q);
        fixed.set(1, 2, QPoly(1));
        fixed.set(2, 1, q);
        const auto& t_first = via_s ? ti : tj;
        const auto& t_second = via_s ? tj : ti;
        check.expect_lazy(x_ok && restrict_to(t_first, order) == moving && restrict_to(t_second, order) == fixed,
                          label);
      } else {
        check.fail(label() + " orbit size " + std::to_string(orbit.size()));
      }
    }
  }
  return check.finish();
}

Report verify_hecke_model(int n, const HeckeVerifyOptions& options) {
  if (n < 2) throw std::invalid_argument("verify_hecke_model: n >= 2 required");
  if (n > options.cap) {
    throw CapacityError("verify hecke: n=" + std::to_string(n) + " exceeds cap " +
                        std::to_string(options.cap));
  }
  Report report{"hecke", n, {}, nlohmann::json::object()};
  const ModelBasis basis(n);
  report.data["dim"] = basis.size();

  if (options.oracle) report.checks.push_back(check_involutive_length(basis));
  report.checks.push_back(check_four_cases(basis));

  {
    CheckBuilder check("grading_down_covers");
    for (int k = 0; 2 * k <= n; ++k) {
      check.expect(involutive_length(minimal_involution(n, k)) == 0,
                   witness(n, "minimal involution with k=" + std::to_string(k)));
    }
    for (const auto& w : basis.involutions()) {
      if (involutive_length(w) == 0) {
        check.expect(w == minimal_involution(n, w.k()), witness(n, "extra minimum " + cycle_string(w.perm())));
        continue;
      }
      bool down = false;
      for (int i = 1; i < n && !down; ++i) down = order_relation(w, i) == OrderCase::down;
      check.expect(down, witness(n, "no down cover at " + cycle_string(w.perm())));
    }
    report.checks.push_back(check.finish());
  }

  const auto gens = rho_q_generators(basis);
  report.checks.push_back(check_hecke_relations(basis, gens));
  report.checks.push_back(check_specialization(basis, gens));
  if (n >= 3) report.checks.push_back(check_orbit_shapes(basis, gens));
  nlohmann::json table = nlohmann::json::array();
  report.checks.push_back(check_hecke_characters(basis, gens, &table));
  report.data["characters"] = std::move(table);
  return report;
}

}  // namespace gelfand
