#include <doctest.h>

#include <deque>
#include <map>
#include <random>

#include "gelfand/errors.hpp"
#include "gelfand/perm.hpp"

using namespace gelfand;

namespace {

Permutation P(std::vector<int> w) { return Permutation(std::move(w)); }

// Word length in the Cayley graph of S_n, by breadth-first search from the identity.
std::map<Permutation, int> bfs_lengths(int n) {
  std::map<Permutation, int> dist{{Permutation::identity(n), 0}};
  std::deque<Permutation> queue{Permutation::identity(n)};
  while (!queue.empty()) {
    const Permutation p = queue.front();
    queue.pop_front();
    for (int i = 1; i < n; ++i) {
      const Permutation next = p * Permutation::generator(n, i);
      if (dist.emplace(next, dist.at(p) + 1).second) queue.push_back(next);
    }
  }
  return dist;
}

std::int64_t involution_count(int n) {
  std::int64_t a = 1, b = 1;  // I(m-2), I(m-1)
  for (int m = 2; m <= n; ++m) {
    const std::int64_t c = b + (m - 1) * a;
    a = b;
    b = c;
  }
  return b;
}

}  // namespace

TEST_CASE("permutation construction rejects non-bijections") {
  CHECK_THROWS_AS(P({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(P({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(P({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::generator(3, 3), std::invalid_argument);
  CHECK(P({}).size() == 0);
}

TEST_CASE("compose") {
  CHECK(P({2, 1, 3}) * P({2, 1, 3}) == P({1, 2, 3}));
  CHECK(P({2, 3, 1}) * P({2, 3, 1}) == P({3, 1, 2}));
  const Permutation p = P({3, 1, 4, 2});
  CHECK(p * Permutation::identity(4) == p);
  CHECK(p * p.inverse() == Permutation::identity(4));
  CHECK_THROWS_AS(p * Permutation::identity(3), SizeError);
}

TEST_CASE("length, inversions, descents") {
  CHECK(length(Permutation::identity(4)) == 0);
  CHECK(length(P({2, 1})) == 1);
  CHECK(length(P({3, 2, 1})) == 3);
  CHECK(inversion_set(Permutation::identity(3)).empty());
  CHECK(inversion_set(P({2, 1})) == std::vector<Pair>{{1, 2}});
  CHECK(inversion_set(P({3, 1, 2})) == std::vector<Pair>{{1, 2}, {1, 3}});
  CHECK(descent_set(Permutation::identity(3)).empty());
  CHECK(descent_set(P({2, 1, 3})) == std::vector<int>{1});
  CHECK(descent_set(P({1, 3, 2})) == std::vector<int>{2});
}

TEST_CASE("length and descents agree with the Cayley-graph oracle") {
  for (int n = 1; n <= 5; ++n) {
    const auto dist = bfs_lengths(n);
    REQUIRE(dist.size() == all_permutations(n).size());
    for (const auto& [p, d] : dist) {
      CHECK(length(p) == d);
      for (int i = 1; i < n; ++i) {
        const bool drops = dist.at(p * Permutation::generator(n, i)) < d;
        CHECK(has_descent(p, i) == drops);
      }
    }
  }
}

TEST_CASE("support, cycle type, printing") {
  CHECK(support(Permutation::identity(3)).empty());
  CHECK(support(P({2, 1, 3})) == std::vector<int>{1, 2});
  CHECK(support(P({1, 4, 3, 2})) == std::vector<int>{2, 4});
  CHECK(cycle_type(Permutation::identity(4)) == Partition({1, 1, 1, 1}));
  CHECK(cycle_type(P({2, 1, 4, 3})) == Partition({2, 2}));
  CHECK(cycle_type(P({2, 3, 1, 4})) == Partition({3, 1}));
  CHECK(cycle_string(Permutation::identity(3)) == "id");
  CHECK(cycle_string(P({3, 4, 1, 2})) == "(1,3)(2,4)");
  CHECK(window_string(P({2, 1, 3})) == "[2,1,3]");
}

TEST_CASE("partitions") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(Partition::from_unsorted({1, 3, 2}) == Partition({3, 2, 1}));
  CHECK(Partition({3, 2}).partial_sums() == std::vector<int>{3});
  CHECK(Partition({2, 2, 1}).conjugate() == Partition({3, 2}));
  CHECK(Partition({2, 1}).to_string() == "(2,1)");
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) CHECK(partitions_of(n).size() == counts[static_cast<std::size_t>(n)]);
  const auto p4 = partitions_of(4);
  CHECK(p4.front() == Partition({4}));
  CHECK(p4.back() == Partition::ones(4));
}

TEST_CASE("enumerate_involutions") {
  const auto i2 = enumerate_involutions(2);
  REQUIRE(i2.size() == 2);
  CHECK(i2[0].perm() == Permutation::identity(2));
  CHECK(i2[1].perm() == P({2, 1}));
  CHECK(enumerate_involutions(4).size() == 10);
  CHECK(enumerate_involutions(7).size() == 232);
  CHECK_THROWS_AS(enumerate_involutions(0), std::invalid_argument);
  for (int n = 1; n <= 8; ++n) {
    const auto inv = enumerate_involutions(n);
    CHECK(static_cast<std::int64_t>(inv.size()) == involution_count(n));
    CHECK(std::is_sorted(inv.begin(), inv.end()));
  }
  // Brute-force filter of S_5.
  std::vector<Permutation> filtered;
  for (const auto& p : all_permutations(5)) {
    if (p.is_involution()) filtered.push_back(p);
  }
  const auto i5 = enumerate_involutions(5);
  REQUIRE(filtered.size() == i5.size());
  for (std::size_t j = 0; j < filtered.size(); ++j) CHECK(filtered[j] == i5[j].perm());
}

TEST_CASE("involution pairs") {
  const Involution w(P({3, 4, 1, 2}));
  CHECK(w.pairs() == std::vector<Pair>{{1, 3}, {2, 4}});
  CHECK(w.k() == 2);
  CHECK(w.has_pair(2, 4));
  CHECK_FALSE(w.has_pair(1, 2));
  CHECK(Involution(P({1, 3, 2})).fixed_points() == std::vector<int>{1});
  CHECK_THROWS_AS(Involution(P({2, 3, 1})), std::invalid_argument);
}

TEST_CASE("square roots") {
  CHECK(square_roots_count(Permutation::identity(4)) == 10);
  CHECK(square_roots_count(P({2, 1})) == 0);
  CHECK(square_roots_count(P({2, 3, 1})) == 1);
  CHECK_THROWS_AS(square_roots_count(Permutation::identity(kSquareRootCap + 1)), CapacityError);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& [lambda, rep] : conjugacy_class_reps(n)) {
      CHECK(square_roots_count(rep) == serial::square_roots_count(rep));
    }
  }
}

TEST_CASE("mu-unimodal") {
  CHECK(is_mu_unimodal(Permutation::identity(4), Partition({2, 2})));
  CHECK_FALSE(is_mu_unimodal(P({2, 1, 3}), Partition({3})));
  CHECK(is_mu_unimodal(P({1, 3, 2}), Partition({3})));
  CHECK(is_mu_unimodal(P({3, 2, 1}), Partition({3})));
  CHECK_THROWS_AS(is_mu_unimodal(P({1, 2}), Partition({3})), std::invalid_argument);
}

TEST_CASE("class representatives") {
  const auto r2 = conjugacy_class_reps(2);
  REQUIRE(r2.size() == 2);
  CHECK(r2[0].second == P({2, 1}));
  CHECK(r2[1].second == Permutation::identity(2));
  CHECK(consecutive_cycles(Partition({3})) == P({2, 3, 1}));
  CHECK(consecutive_cycles(Partition({2, 2})) == P({2, 1, 4, 3}));
  for (const auto& [lambda, rep] : conjugacy_class_reps(6)) CHECK(cycle_type(rep) == lambda);
}

TEST_CASE("conjugation preserves cycle type (random)") {
  std::mt19937_64 rng(7);
  const auto s6 = all_permutations(6);
  std::uniform_int_distribution<std::size_t> pick(0, s6.size() - 1);
  for (int t = 0; t < 200; ++t) {
    const auto& p = s6[pick(rng)];
    const auto& w = s6[pick(rng)];
    CHECK(cycle_type(conjugate(p, w)) == cycle_type(w));
    CHECK(conjugate(p, w) == p * w * p.inverse());
  }
}
