#include <doctest.h>

#include "gelfand/errors.hpp"
#include "gelfand/typeb.hpp"

using namespace gelfand;

namespace {

SignedPermutation B(std::vector<int> w) { return SignedPermutation(std::move(w)); }

}  // namespace

TEST_CASE("signed permutations") {
  CHECK_THROWS_AS(B({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(B({0}), std::invalid_argument);
  CHECK(B({-1}) * B({-1}) == B({1}));
  CHECK(SignedPermutation::generator(2, 0) == B({-1, 2}));
  CHECK(SignedPermutation::generator(3, 2) == B({1, 3, 2}));
  const SignedPermutation g = B({-3, 1, -2});
  CHECK(g(-1) == 3);
  CHECK(g * g.inverse() == SignedPermutation::identity(3));
  CHECK(g.abs() == Permutation({3, 1, 2}));
  CHECK(g.to_string() == "[-3,1,-2]");
  CHECK_THROWS_AS(g * B({1, 2}), SizeError);
}

TEST_CASE("elements and involutions") {
  CHECK(b_elements(3).size() == 48);
  const auto i1 = b_involutions(1);
  REQUIRE(i1.size() == 2);
  CHECK(i1[0] == B({-1}));
  CHECK(i1[1] == B({1}));
  CHECK(b_involutions(2).size() == 6);
  CHECK(b_involutions(4).size() == 76);
}

TEST_CASE("descents agree with word length") {
  for (int n = 1; n <= 3; ++n) {
    const auto words = b_shortest_words(n);
    CHECK(words.size() == b_elements(n).size());
    for (const auto& [w, word] : words) {
      const auto des = b_descent_set(w);
      for (int i = 0; i < n; ++i) {
        const bool drops = words.at(w * SignedPermutation::generator(n, i)).size() < word.size();
        const bool listed = std::find(des.begin(), des.end(), i) != des.end();
        CHECK(listed == drops);
      }
    }
  }
  CHECK(b_descent_set(SignedPermutation::identity(3)).empty());
  CHECK(b_descent_set(B({-1, 2})) == std::vector<int>{0});
  CHECK(b_descent_set(B({2, 1})) == std::vector<int>{1});
}

TEST_CASE("generator matrices") {
  const BBasis b1(1);
  const SignedPermMatrix s0 = rho_b_generator(0, b1);
  CHECK(s0.column(b1.index_of(B({-1}))) == SignedPermMatrix::Target{b1.index_of(B({-1})), -1});
  CHECK(s0.column(b1.index_of(B({1}))) == SignedPermMatrix::Target{b1.index_of(B({1})), 1});
  const BBasis b2(2);
  const std::size_t j = b2.index_of(B({2, 1}));
  CHECK(rho_b_generator(1, b2).column(j) == SignedPermMatrix::Target{j, -1});
}

TEST_CASE("characters equal square-root counts") {
  CHECK(b_square_roots_count(B({1})) == 2);
  CHECK(b_square_roots_count(B({-1})) == 0);
  for (int n = 1; n <= 3; ++n) {
    const BBasis basis(n);
    std::vector<SignedPermMatrix> gens;
    for (int i = 0; i < n; ++i) gens.push_back(rho_b_generator(i, basis));
    for (const auto& [g, word] : b_shortest_words(n)) {
      CHECK(rho_b_of_word(word, gens, basis.size()).trace() == b_square_roots_count(g));
    }
  }
  CHECK(b_conjugacy_class_reps(2).size() == 5);
  CHECK(b_conjugacy_class_reps(3).size() == 10);
}

TEST_CASE("verify_b_model") {
  for (int n = 1; n <= 4; ++n) {
    const Report r = verify_b_model(n);
    INFO(r.to_text());
    CHECK(r.passed());
  }
  CHECK_THROWS_AS(verify_b_model(kTypeBVerifyCap + 1), CapacityError);
}
