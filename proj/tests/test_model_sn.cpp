#include <doctest.h>

#include <random>

#include "gelfand/errors.hpp"
#include "gelfand/model_sn.hpp"

using namespace gelfand;

namespace {

Permutation P(std::vector<int> w) { return Permutation(std::move(w)); }
Involution I(std::vector<int> w) { return Involution(Permutation(std::move(w))); }

}  // namespace

TEST_CASE("inv_w") {
  CHECK(inv_w(Permutation::generator(2, 1), I({2, 1})) == 1);
  CHECK(inv_w(Permutation::identity(4), I({3, 4, 1, 2})) == 0);
  CHECK(inv_w(Permutation::generator(3, 1), I({3, 2, 1})) == 0);
  // Brute-force definition: inversions of p that are 2-cycles of w.
  for (const auto& p : all_permutations(4)) {
    for (const auto& w : enumerate_involutions(4)) {
      int count = 0;
      for (const auto& [a, b] : inversion_set(p)) count += w.has_pair(a, b) ? 1 : 0;
      CHECK(inv_w(p, w) == count);
    }
  }
}

TEST_CASE("generator sign rule") {
  CHECK(sign_of_generator(1, I({2, 1})) == -1);
  CHECK(sign_of_generator(1, I({1, 2})) == 1);
  CHECK(sign_of_generator(2, I({2, 1, 3})) == 1);
}

TEST_CASE("rho matrices") {
  const ModelBasis b2(2);
  CHECK(rho_matrix(Permutation::identity(2), b2) == SignedPermMatrix::identity(2));
  const SignedPermMatrix s = rho_generator(1, b2);
  CHECK(s.column(0) == SignedPermMatrix::Target{0, 1});
  CHECK(s.column(1) == SignedPermMatrix::Target{1, -1});

  const ModelBasis b3(3);
  const SignedPermMatrix s1 = rho_generator(1, b3);
  const auto col = s1.column(b3.index_of(P({1, 3, 2})));
  CHECK(col.row == b3.index_of(P({3, 2, 1})));
  CHECK(col.sign == 1);

  // Generator rule and closed form agree.
  for (int n = 2; n <= 6; ++n) {
    const ModelBasis basis(n);
    for (int i = 1; i < n; ++i) {
      CHECK(rho_generator(i, basis) == rho_matrix(Permutation::generator(n, i), basis));
    }
  }
  CHECK_THROWS_AS(b3.index_of(P({2, 3, 1})), std::out_of_range);
}

TEST_CASE("homomorphism on random pairs") {
  const ModelBasis basis(6);
  const auto s6 = all_permutations(6);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, s6.size() - 1);
  for (int t = 0; t < 60; ++t) {
    const auto& a = s6[pick(rng)];
    const auto& b = s6[pick(rng)];
    CHECK(rho_matrix(a * b, basis) == rho_matrix(a, basis) * rho_matrix(b, basis));
  }
}

TEST_CASE("characters") {
  const ModelBasis b4(4);
  CHECK(rho_character(Permutation::identity(4), b4) == 10);
  CHECK(rho_character(Permutation::generator(2, 1), ModelBasis(2)) == 0);
  CHECK(rho_character(P({2, 3, 1}), ModelBasis(3)) == 1);
  for (const auto& p : all_permutations(4)) {
    CHECK(rho_character(p, b4) == rho_matrix(p, b4).trace());
  }
}

TEST_CASE("class count formula") {
  for (int r = 1; r <= 6; ++r) CHECK(fs_factor(r, 0) == 1);
  CHECK(fs_factor(2, 1) == 0);
  CHECK(fs_factor(4, 1) == 0);
  CHECK(fs_factor(2, 2) == 2);
  CHECK(fs_factor(1, 4) == 10);
  CHECK(fs_factor(2, 4) == 12);
  CHECK(fs_factor(3, 2) == 4);
  std::vector<int> d(8, 0);
  d[1] = 7;
  CHECK(fs_count_formula(d) == 232);
  CHECK(fs_count_formula({0, 0, 1}) == 0);
}

TEST_CASE("class characters match square roots and the formula") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& row : sn_class_characters(ModelBasis(n))) {
      INFO("n=" << n << " class " << row.cycle_type.to_string());
      CHECK(row.matches());
    }
  }
  const auto rows = sn_class_characters(ModelBasis(2));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].cycle_type == Partition({2}));
  CHECK(rows[0].trace == 0);
  CHECK(rows[1].trace == 2);
  for (const auto& row : sn_class_characters(ModelBasis(4))) {
    if (row.cycle_type == Partition({2, 2})) CHECK(row.trace == 2);
    if (row.cycle_type == Partition({4})) CHECK(row.trace == 0);
  }
}

TEST_CASE("orbits") {
  CHECK(orbit_under_pair(1, I({1, 2, 3, 5, 4})).size() == 1);
  CHECK(orbit_under_pair(1, I({2, 1, 3})).size() == 3);
  CHECK(orbit_under_pair(1, I({4, 5, 3, 1, 2})).size() == 6);
  CHECK(check_orbit_sizes(5).passed);
  CHECK(check_descent_equivalence(5).passed);
}

TEST_CASE("verify_sn_model") {
  for (int n = 2; n <= 5; ++n) {
    const Report r = verify_sn_model(n);
    INFO(r.to_text());
    CHECK(r.passed());
  }
  CHECK_THROWS_AS(verify_sn_model(kSnVerifyCap + 1), CapacityError);
  CHECK(check_sign_cocycle(5, 1000, 1).passed);
  CHECK(check_sign_cocycle(5, 1000, 1).cases == 1000);
}
