#include "gelfand/typeb.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <exception>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gelfand/errors.hpp"

namespace gelfand {

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : window_) {
    const int a = std::abs(v);
    if (a < 1 || a > n || seen[static_cast<std::size_t>(a)]) {
      throw std::invalid_argument("not a signed permutation window");
    }
    seen[static_cast<std::size_t>(a)] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::generator(int n, int i) {
  if (i < 0 || i >= n) {
    throw std::invalid_argument("B_n generator index " + std::to_string(i) + " out of range for n=" +
                                std::to_string(n));
  }
  SignedPermutation g = identity(n);
  if (i == 0) {
    g.window_[0] = -1;
  } else {
    std::swap(g.window_[static_cast<std::size_t>(i - 1)], g.window_[static_cast<std::size_t>(i)]);
  }
  return g;
}

int SignedPermutation::operator()(int i) const {
  const int v = window_[static_cast<std::size_t>(std::abs(i) - 1)];
  return i < 0 ? -v : v;
}

Permutation SignedPermutation::abs() const {
  std::vector<int> w;
  for (int v : window_) w.push_back(std::abs(v));
  return Permutation(std::move(w));
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> inv(window_.size());
  for (std::size_t i = 0; i < window_.size(); ++i) {
    const int v = window_[i];
    const int pos = static_cast<int>(i) + 1;
    inv[static_cast<std::size_t>(std::abs(v) - 1)] = v < 0 ? -pos : pos;
  }
  return SignedPermutation(std::move(inv));
}

bool SignedPermutation::is_identity() const { return *this == identity(size()); }

bool SignedPermutation::is_involution() const { return (*this * *this).is_identity(); }

std::string SignedPermutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < window_.size(); ++i) os << (i ? "," : "") << window_[i];
  os << ']';
  return os.str();
}

SignedPermutation b_compose(const SignedPermutation& p, const SignedPermutation& r) {
  if (p.size() != r.size()) throw SizeError("b_compose: size mismatch");
  std::vector<int> w(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) w[static_cast<std::size_t>(i - 1)] = p(r(i));
  return SignedPermutation(std::move(w));
}

SignedPermutation b_conjugate(const SignedPermutation& g, const SignedPermutation& w) {
  return g * w * g.inverse();
}

std::vector<SignedPermutation> b_elements(int n) {
  std::vector<SignedPermutation> out;
  for (const auto& p : all_permutations(n)) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> w(p.window().begin(), p.window().end());
      for (int i = 0; i < n; ++i) {
        if ((mask >> i) & 1u) w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
      }
      out.emplace_back(std::move(w));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedPermutation> b_involutions(int n) {
  std::vector<SignedPermutation> out;
  for (auto& g : b_elements(n)) {
    if (g.is_involution()) out.push_back(std::move(g));
  }
  return out;
}

std::vector<int> b_descent_set(const SignedPermutation& w) {
  std::vector<int> des;
  if (w.size() >= 1 && w(1) < 0) des.push_back(0);
  for (int i = 1; i < w.size(); ++i) {
    if (w(i) > w(i + 1)) des.push_back(i);
  }
  return des;
}

std::int64_t b_square_roots_count(const SignedPermutation& g) {
  std::int64_t count = 0;
  for (const auto& u : b_elements(g.size())) count += (u * u == g) ? 1 : 0;
  return count;
}

BBasis::BBasis(int n) : n_(n), involutions_(b_involutions(n)) {
  for (std::size_t i = 0; i < involutions_.size(); ++i) index_.emplace(involutions_[i], i);
}

std::size_t BBasis::index_of(const SignedPermutation& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw std::out_of_range("not a B_n involution: " + w.to_string());
  return it->second;
}

SignedPermMatrix rho_b_generator(int i, const BBasis& basis) {
  const SignedPermutation s = SignedPermutation::generator(basis.n(), i);
  std::vector<SignedPermMatrix::Target> cols(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const SignedPermutation& w = basis[j];
    const SignedPermutation moved = b_conjugate(s, w);
    int sign = 1;
    if (moved == w) {
      const bool descent = i == 0 ? w(1) < 0 : has_descent(w.abs(), i);
      sign = descent ? -1 : 1;
    }
    cols[j] = {basis.index_of(moved), sign};
  }
  return SignedPermMatrix(std::move(cols));
}

std::map<SignedPermutation, std::vector<int>> b_shortest_words(int n) {
  std::map<SignedPermutation, std::vector<int>> words;
  const SignedPermutation id = SignedPermutation::identity(n);
  words.emplace(id, std::vector<int>{});
  std::deque<SignedPermutation> queue{id};
  std::vector<SignedPermutation> gens;
  for (int i = 0; i < n; ++i) gens.push_back(SignedPermutation::generator(n, i));
  while (!queue.empty()) {
    const SignedPermutation g = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      SignedPermutation next = g * gens[static_cast<std::size_t>(i)];
      if (words.count(next) != 0) continue;
      auto word = words.at(g);
      word.push_back(i);
      words.emplace(next, std::move(word));
      queue.push_back(std::move(next));
    }
  }
  return words;
}

SignedPermMatrix rho_b_of_word(const std::vector<int>& word, const std::vector<SignedPermMatrix>& gens,
                               std::size_t dim) {
  SignedPermMatrix acc = SignedPermMatrix::identity(dim);
  for (int i : word) acc = acc * gens.at(static_cast<std::size_t>(i));
  return acc;
}

std::vector<SignedPermutation> b_conjugacy_class_reps(int n) {
  const auto group = b_elements(n);
  std::set<SignedPermutation> seen;
  std::vector<SignedPermutation> reps;
  for (const auto& g : group) {  // ascending, so the first unseen element is its class minimum
    if (seen.count(g) != 0) continue;
    reps.push_back(g);
    for (const auto& h : group) seen.insert(b_conjugate(h, g));
  }
  return reps;
}

Report verify_b_model(int n, int cap) {
  if (n < 1) throw std::invalid_argument("verify_b_model: n >= 1 required");
  if (n > cap) {
    throw CapacityError("verify typeb: n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  Report report{"typeb", n, {}, nlohmann::json::object()};
  const BBasis basis(n);
  report.data["dim"] = basis.size();
  const auto label = [&](const std::string& what) { return "n=" + std::to_string(n) + " " + what; };

  std::vector<SignedPermMatrix> gens;
  for (int i = 0; i < n; ++i) gens.push_back(rho_b_generator(i, basis));
  const auto identity = SignedPermMatrix::identity(basis.size());

  {
    CheckBuilder check("coxeter_relations");
    for (int i = 0; i < n; ++i) {
      const auto& a = gens[static_cast<std::size_t>(i)];
      check.expect_lazy(a * a == identity, [&] { return label("square s_" + std::to_string(i)); });
      for (int j = i + 1; j < n; ++j) {
        const auto& b = gens[static_cast<std::size_t>(j)];
        const auto name = "s_" + std::to_string(i) + " s_" + std::to_string(j);
        if (j - i > 1) {
          check.expect_lazy(a * b == b * a, [&] { return label("commute " + name); });
        } else if (i == 0) {
          check.expect_lazy(power(a * b, 4) == identity, [&] { return label("order 4 " + name); });
        } else {
          check.expect_lazy(a * b * a == b * a * b, [&] { return label("braid " + name); });
        }
      }
    }
    report.checks.push_back(check.finish());
  }

  const auto words = b_shortest_words(n);
  const auto image = [&](const SignedPermutation& g) {
    return rho_b_of_word(words.at(g), gens, basis.size());
  };

  if (n <= kTypeBAllElementsCap) {
    CheckBuilder check("homomorphism");
    const auto group = b_elements(n);
    std::vector<SignedPermMatrix> images;
    for (const auto& g : group) images.push_back(image(g));
    for (std::size_t a = 0; a < group.size(); ++a) {
      for (std::size_t b = 0; b < group.size(); ++b) {
        check.expect_lazy(image(group[a] * group[b]) == images[a] * images[b], [&] {
          return label("g=" + group[a].to_string() + " h=" + group[b].to_string());
        });
      }
    }
    report.checks.push_back(check.finish());
  }

  {
    const bool all = n <= kTypeBAllElementsCap;
    const auto elements = all ? b_elements(n) : b_conjugacy_class_reps(n);
    CheckBuilder check(all ? "trace_equals_square_roots_all_elements" : "trace_equals_square_roots_class_reps");
    std::vector<std::int64_t> traces(elements.size()), roots(elements.size());
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t e = 0; e < elements.size(); ++e) {
      try {
        traces[e] = image(elements[e]).trace();
        roots[e] = b_square_roots_count(elements[e]);
      } catch (...) {
#pragma omp critical(gelfand_typeb_sweep)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    nlohmann::json table = nlohmann::json::array();
    for (std::size_t e = 0; e < elements.size(); ++e) {
      check.expect_lazy(traces[e] == roots[e], [&] {
        return label("g=" + elements[e].to_string() + " trace=" + std::to_string(traces[e]) +
                     " square_roots=" + std::to_string(roots[e]));
      });
      if (!all) table.push_back({{"element", elements[e].window()}, {"trace", traces[e]}, {"square_roots", roots[e]}});
    }
    report.checks.push_back(check.finish());
    if (!all) report.data["class_characters"] = std::move(table);
  }

  {
    // Dimension is the sum of irreducible degrees; the class count is the number of irreducibles.
    CheckBuilder check("dimension_and_class_count");
    const auto id = SignedPermutation::identity(n);
    check.expect(static_cast<std::int64_t>(basis.size()) == b_square_roots_count(id),
                 label("dim != #square roots of identity"));
    std::int64_t bipartitions = 0;
    for (int a = 0; a <= n; ++a) {
      const std::int64_t left = a == 0 ? 1 : static_cast<std::int64_t>(partitions_of(a).size());
      const std::int64_t right = a == n ? 1 : static_cast<std::int64_t>(partitions_of(n - a).size());
      bipartitions += left * right;
    }
    const auto classes = static_cast<std::int64_t>(b_conjugacy_class_reps(n).size());
    check.expect(classes == bipartitions, label("classes=" + std::to_string(classes) +
                                                " bipartitions=" + std::to_string(bipartitions)));
    report.data["classes"] = classes;
    report.checks.push_back(check.finish());
  }
  return report;
}

}  // namespace gelfand
