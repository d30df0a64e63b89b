#include "gelfand/model_sn.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <random>
#include <set>
#include <sstream>
#include <functional>
#include <stdexcept>

#include "gelfand/errors.hpp"

namespace gelfand {

ModelBasis::ModelBasis(int n) : n_(n), involutions_(enumerate_involutions(n)) {
  for (std::size_t i = 0; i < involutions_.size(); ++i) index_.emplace(involutions_[i].perm(), i);
}

std::size_t ModelBasis::index_of(const Permutation& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw std::out_of_range("not a basis involution: " + window_string(w));
  return it->second;
}

int inv_w(const Permutation& p, const Involution& w) {
  if (p.size() != w.size()) throw SizeError("inv_w: size mismatch");
  int count = 0;
  for (const auto& [a, b] : w.pairs()) count += p(a) > p(b) ? 1 : 0;
  return count;
}

int sign_of_generator(int i, const Involution& w) {
  const Permutation s = Permutation::generator(w.size(), i);
  const bool fixed = conjugate(s, w.perm()) == w.perm();
  return fixed && has_descent(w.perm(), i) ? -1 : 1;
}

SignedPermMatrix rho_generator(int i, const ModelBasis& basis) {
  const Permutation s = Permutation::generator(basis.n(), i);
  std::vector<SignedPermMatrix::Target> cols(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Involution& w = basis[j];
    cols[j] = {basis.index_of(conjugate(s, w.perm())), sign_of_generator(i, w)};
  }
  return SignedPermMatrix(std::move(cols));
}

SignedPermMatrix rho_matrix(const Permutation& p, const ModelBasis& basis) {
  if (p.size() != basis.n()) throw SizeError("rho_matrix: size mismatch");
  std::vector<SignedPermMatrix::Target> cols(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Involution& w = basis[j];
    cols[j] = {basis.index_of(conjugate(p, w.perm())), inv_w(p, w) % 2 == 0 ? 1 : -1};
  }
  return SignedPermMatrix(std::move(cols));
}

std::int64_t rho_character(const Permutation& p, const ModelBasis& basis) {
  if (p.size() != basis.n()) throw SizeError("rho_character: size mismatch");
  std::int64_t total = 0;
  for (const auto& w : basis.involutions()) {
    if (conjugate(p, w.perm()) == w.perm()) total += inv_w(p, w) % 2 == 0 ? 1 : -1;
  }
  return total;
}

namespace {

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("fs_count_formula: overflow");
  return r;
}

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r = mul_checked(r, base);
  return r;
}

// Ways to choose k disjoint unordered pairs from d labelled points:
// d! / ((d - 2k)! 2^k k!).
std::int64_t pairings(int d, int k) {
  std::int64_t r = 1;
  // C(d, 2k) * (2k - 1)!!
  for (int j = 0; j < 2 * k; ++j) r = mul_checked(r, d - j);
  for (int j = 1; j <= 2 * k; ++j) r /= j;
  for (int j = 2 * k - 1; j > 1; j -= 2) r = mul_checked(r, j);
  return r;
}

}  // namespace

std::int64_t fs_factor(int r, int d) {
  if (r < 1 || d < 0) throw std::invalid_argument("fs_factor: r >= 1 and d >= 0 required");
  if (d == 0) return 1;
  if (r % 2 == 0) {
    if (d % 2 == 1) return 0;
    return mul_checked(pairings(d, d / 2), ipow(r, d / 2));
  }
  std::int64_t sum = 0;
  for (int k = 0; k <= d / 2; ++k) sum += mul_checked(pairings(d, k), ipow(r, k));
  return sum;
}

std::int64_t fs_count_formula(const std::vector<int>& d) {
  std::int64_t product = 1;
  for (std::size_t r = 1; r < d.size(); ++r) {
    product = mul_checked(product, fs_factor(static_cast<int>(r), d[r]));
  }
  return product;
}

std::vector<Involution> orbit_under_pair(int i, const Involution& w) {
  const int n = w.size();
  if (i < 1 || i > n - 2) throw std::invalid_argument("orbit_under_pair: need 1 <= i <= n-2");
  const Permutation s = Permutation::generator(n, i);
  const Permutation t = Permutation::generator(n, i + 1);
  std::set<Permutation> seen{w.perm()};
  std::deque<Permutation> queue{w.perm()};
  while (!queue.empty()) {
    const Permutation v = queue.front();
    queue.pop_front();
    for (const auto* g : {&s, &t}) {
      Permutation next = conjugate(*g, v);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Involution> orbit;
  for (const auto& v : seen) orbit.emplace_back(v);
  return orbit;
}

// Verification

namespace {

std::string witness(int n, const std::string& what) {
  std::ostringstream os;
  os << "n=" << n << ' ' << what;
  return os.str();
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(w.begin(), w.end(), rng);
  return Permutation(std::move(w));
}

int parity_sign(int k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

Check check_sn_relations(const ModelBasis& basis) {
  const int n = basis.n();
  CheckBuilder check("generator_relations");
  const auto identity = SignedPermMatrix::identity(basis.size());
  std::vector<SignedPermMatrix> gens;
  for (int i = 1; i < n; ++i) gens.push_back(rho_generator(i, basis));
  for (int i = 1; i < n; ++i) {
    const auto& a = gens[static_cast<std::size_t>(i - 1)];
    check.expect_lazy(a * a == identity, [&] { return witness(n, "square s_" + std::to_string(i)); });
    for (int j = i + 1; j < n; ++j) {
      const auto& b = gens[static_cast<std::size_t>(j - 1)];
      if (j - i > 1) {
        check.expect_lazy(a * b == b * a, [&] {
          return witness(n, "commute s_" + std::to_string(i) + " s_" + std::to_string(j));
        });
      } else {
        check.expect_lazy(a * b * a == b * a * b, [&] {
          return witness(n, "braid s_" + std::to_string(i) + " s_" + std::to_string(j));
        });
      }
    }
  }
  return check.finish();
}

Check check_sign_cocycle(int n, int triples, std::uint64_t seed) {
  CheckBuilder check("sign_cocycle");
  std::mt19937_64 rng(seed);
  const auto involutions = enumerate_involutions(n);
  std::uniform_int_distribution<std::size_t> pick(0, involutions.size() - 1);
  for (int t = 0; t < triples; ++t) {
    const Permutation sigma = random_permutation(n, rng);
    const Permutation pi = random_permutation(n, rng);
    const Involution& w = involutions[pick(rng)];
    const int lhs = parity_sign(inv_w(sigma * pi, w));
    const int rhs = parity_sign(inv_w(pi, w)) * parity_sign(inv_w(sigma, conjugate(pi, w)));
    check.expect_lazy(lhs == rhs, [&] {
      return witness(n, "sigma=" + window_string(sigma) + " pi=" + window_string(pi) +
                            " w=" + cycle_string(w.perm()));
    });
  }
  return check.finish();
}

Check check_orbit_sizes(int n) {
  CheckBuilder check("orbit_sizes_1_3_6");
  for (int i = 1; i <= n - 2; ++i) {
    for (const auto& w : enumerate_involutions(n)) {
      const auto size = orbit_under_pair(i, w).size();
      check.expect_lazy(size == 1 || size == 3 || size == 6, [&] {
        return witness(n, "i=" + std::to_string(i) + " w=" + cycle_string(w.perm()) +
                              " orbit size " + std::to_string(size));
      });
    }
  }
  return check.finish();
}

Check check_descent_equivalence(int n) {
  // In an orbit of size 3 pick v with s v s = v, t v t != v; then u = s t v t s
  // satisfies t u t = u, and s in Des(v) iff t in Des(u).
  CheckBuilder check("descent_equivalence_order3");
  for (int i = 1; i <= n - 2; ++i) {
    for (const auto& w : enumerate_involutions(n)) {
      const auto orbit = orbit_under_pair(i, w);
      if (orbit.size() != 3 || orbit.front() != w) continue;  // each orbit once
      for (const auto& [si, ti] : {std::pair{i, i + 1}, std::pair{i + 1, i}}) {
        const Permutation s = Permutation::generator(n, si);
        const Permutation t = Permutation::generator(n, ti);
        for (const auto& v : orbit) {
          if (conjugate(s, v.perm()) != v.perm() || conjugate(t, v.perm()) == v.perm()) continue;
          const Permutation u = conjugate(s * t, v.perm());
          const auto what = [&] {
            return witness(n, "i=" + std::to_string(i) + " v=" + cycle_string(v.perm()));
          };
          if (!check.expect_lazy(conjugate(t, u) == u, what)) continue;
          check.expect_lazy(has_descent(v.perm(), si) == has_descent(u, ti), what);
        }
      }
    }
  }
  return check.finish();
}

std::vector<SnClassCharacter> sn_class_characters(const ModelBasis& basis) {
  const auto reps = conjugacy_class_reps(basis.n());
  std::vector<SnClassCharacter> rows(reps.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t c = 0; c < reps.size(); ++c) {
    try {
      const auto& [lambda, rep] = reps[c];
      SnClassCharacter row{lambda, rep};
      row.trace = rho_matrix(rep, basis).trace();
      row.character = rho_character(rep, basis);
      row.square_roots = square_roots_count(rep);
      row.formula = fs_count_formula(lambda.multiplicities());
      rows[c] = std::move(row);
    } catch (...) {
#pragma omp critical(gelfand_sn_classes)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return rows;
}

Report verify_sn_model(int n, const SnVerifyOptions& options) {
  if (n < 2) throw std::invalid_argument("verify_sn_model: n >= 2 required");
  if (n > options.cap) {
    throw CapacityError("verify sn: n=" + std::to_string(n) + " exceeds cap " +
                        std::to_string(options.cap));
  }
  Report report{"sn", n, {}, nlohmann::json::object()};
  const ModelBasis basis(n);
  report.data["dim"] = basis.size();

  report.checks.push_back(check_sn_relations(basis));

  {
    CheckBuilder check("generator_rule_matches_inv_w");
    for (int i = 1; i < n; ++i) {
      check.expect_lazy(rho_generator(i, basis) == rho_matrix(Permutation::generator(n, i), basis),
                        [&] { return witness(n, "s_" + std::to_string(i)); });
    }
    report.checks.push_back(check.finish());
  }

  {
    CheckBuilder check("homomorphism");
    const auto test_pair = [&](const Permutation& sigma, const Permutation& pi) {
      check.expect_lazy(rho_matrix(sigma * pi, basis) == rho_matrix(sigma, basis) * rho_matrix(pi, basis),
                        [&] { return witness(n, "sigma=" + window_string(sigma) + " pi=" + window_string(pi)); });
    };
    if (n <= kSnHomomorphismAllPairsCap) {
      const auto group = all_permutations(n);
      std::vector<SignedPermMatrix> images;
      for (const auto& g : group) images.push_back(rho_matrix(g, basis));
      for (std::size_t a = 0; a < group.size(); ++a) {
        for (std::size_t b = 0; b < group.size(); ++b) {
          check.expect_lazy(rho_matrix(group[a] * group[b], basis) == images[a] * images[b], [&] {
            return witness(n, "sigma=" + window_string(group[a]) + " pi=" + window_string(group[b]));
          });
        }
      }
    } else {
      std::mt19937_64 rng(options.seed);
      for (int t = 0; t < options.random_pairs; ++t) {
        const Permutation sigma = random_permutation(n, rng);
        const Permutation pi = random_permutation(n, rng);
        test_pair(sigma, pi);
      }
    }
    report.checks.push_back(check.finish());
  }

  report.checks.push_back(check_sign_cocycle(n, options.cocycle_triples, options.seed));
  if (n >= 3) {
    report.checks.push_back(check_orbit_sizes(n));
    report.checks.push_back(check_descent_equivalence(n));
  }

  const auto rows = sn_class_characters(basis);
  CheckBuilder classes("class_characters");
  CheckBuilder odd_cycles("odd_cycle_classes_all_signs_positive");
  CheckBuilder even_cycles("even_cycle_classes_vanish_for_odd_count");
  nlohmann::json table = nlohmann::json::array();
  for (const auto& row : rows) {
    classes.expect_lazy(row.matches(), [&] {
      std::ostringstream os;
      os << "class " << row.cycle_type.to_string() << " trace=" << row.trace
         << " character=" << row.character << " square_roots=" << row.square_roots
         << " formula=" << row.formula;
      return witness(n, os.str());
    });
    table.push_back({{"class", row.cycle_type.to_string()},
                     {"trace", row.trace},
                     {"square_roots", row.square_roots},
                     {"formula", row.formula}});
    // Classes of uniform cycle length r, n = r * (n / r).
    const auto parts = row.cycle_type.parts();
    if (std::adjacent_find(parts.begin(), parts.end(), std::not_equal_to<>()) != parts.end()) continue;
    const int r = parts.front();
    if (r % 2 == 1) {
      for (const auto& w : basis.involutions()) {
        if (conjugate(row.representative, w.perm()) != w.perm()) continue;
        odd_cycles.expect_lazy(inv_w(row.representative, w) % 2 == 0, [&] {
          return witness(n, "class " + row.cycle_type.to_string() + " w=" + cycle_string(w.perm()));
        });
      }
    } else if ((n / r) % 2 == 1) {
      even_cycles.expect_lazy(row.character == 0, [&] {
        return witness(n, "class " + row.cycle_type.to_string());
      });
    }
  }
  report.checks.push_back(classes.finish());
  report.checks.push_back(odd_cycles.finish());
  report.checks.push_back(even_cycles.finish());
  report.data["characters"] = std::move(table);
  return report;
}

}  // namespace gelfand
