#include <doctest.h>

#include "gelfand/errors.hpp"
#include "gelfand/model_hecke.hpp"

using namespace gelfand;

namespace {

const QPoly q = QPoly::q();

Permutation P(std::vector<int> w) { return Permutation(std::move(w)); }
Involution I(std::vector<int> w) { return Involution(Permutation(std::move(w))); }

}  // namespace

TEST_CASE("involutive length") {
  CHECK(involutive_length(I({2, 1, 4, 3})) == 0);
  CHECK(involutive_length(I({3, 4, 1, 2})) == 1);
  CHECK(involutive_length(I({4, 3, 2, 1})) == 2);
  CHECK(involutive_length(I({3, 2, 1})) == 1);
  CHECK(involutive_length(I({1, 2, 3})) == 0);
  CHECK(involutive_length_oracle(I({3, 2, 1})) == 1);
  CHECK(involutive_length_oracle(I({4, 3, 2, 1})) == 2);
  for (int k = 0; k <= 3; ++k) CHECK(involutive_length(minimal_involution(7, k)) == 0);
  CHECK_THROWS_AS(involutive_length_oracle(Involution(Permutation::identity(9))), CapacityError);
}

TEST_CASE("closed form equals the oracle, parallel table equals serial") {
  for (int n = 1; n <= 6; ++n) {
    const ModelBasis basis(n);
    const auto table = involutive_length_oracle_table(basis);
    CHECK(table == serial::involutive_length_oracle_table(basis));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      CHECK(involutive_length(basis[j]) == table[j]);
      if (n <= 4) CHECK(involutive_length_oracle(basis[j]) == table[j]);
    }
  }
}

TEST_CASE("order relation") {
  CHECK(order_relation(I({2, 1}), 1) == OrderCase::fixed_descent);
  CHECK(order_relation(I({1, 2, 3}), 2) == OrderCase::fixed_nondescent);
  CHECK(order_relation(I({3, 2, 1}), 1) == OrderCase::up);
  CHECK(order_relation(I({1, 3, 2}), 1) == OrderCase::down);
  CHECK(to_string(OrderCase::up) == "up");
  for (int n = 2; n <= 7; ++n) CHECK(check_four_cases(ModelBasis(n)).passed);
}

TEST_CASE("generator matrices") {
  const ModelBasis b2(2);
  const PolyMatrix t = rho_q_generator(1, b2);
  CHECK(to_canonical_json(t) == R"({"dim":2,"entries":[[0,0,[1]],[1,1,[0,-1]]]})");

  const ModelBasis b3(3);
  const PolyMatrix t1 = rho_q_generator(1, b3);
  const std::size_t c23 = b3.index_of(P({1, 3, 2}));
  const std::size_t c13 = b3.index_of(P({3, 2, 1}));
  CHECK(t1.column(c23).size() == 1);
  CHECK(t1.at(c13, c23) == QPoly(1));
  CHECK(t1.at(c13, c13) == 1 - q);
  CHECK(t1.at(c23, c13) == q);
}

TEST_CASE("words and T_mu") {
  CHECK(t_mu_word(Partition({4})) == std::vector<int>{1, 2, 3});
  CHECK(t_mu_word(Partition::ones(4)).empty());
  CHECK(t_mu_word(Partition({2, 1})) == std::vector<int>{1});
  CHECK(t_mu_word(Partition({3, 2})) == std::vector<int>{1, 2, 4});

  const ModelBasis b2(2);
  const PolyMatrix t = rho_q_generator(1, b2);
  CHECK(rho_q_of_word({}, b2) == mat_identity(2));
  CHECK(rho_q_of_word({1}, b2) == t);
  CHECK(rho_q_of_word({1, 1}, b2) == (1 - q) * t + q * mat_identity(2));
}

TEST_CASE("mu descent number") {
  CHECK(mu_descent_number(Permutation::identity(3), Partition({2, 1})) == 0);
  CHECK(mu_descent_number(P({1, 3, 2}), Partition({2, 1})) == 0);
  CHECK(mu_descent_number(P({3, 2, 1}), Partition({2, 1})) == 1);
}

TEST_CASE("characters") {
  const ModelBasis b2(2), b3(3);
  CHECK(hecke_model_character(Partition({2}), b2) == 1 - q);
  CHECK(hecke_model_character(Partition({1, 1}), b2) == QPoly(2));
  CHECK(hecke_model_character(Partition({2, 1}), b3) == 2 - 2 * q);
  CHECK(mu_unimodal_character(Partition({1, 1})) == QPoly(2));
  CHECK(mu_unimodal_character(Partition({2, 1})) == 2 - 2 * q);
  CHECK(mu_unimodal_character(Partition({3})) == 1 - q + pow(q, 2));
  for (int n = 1; n <= 6; ++n) {
    const ModelBasis basis(n);
    for (const auto& mu : partitions_of(n)) {
      INFO("mu=" << mu.to_string());
      const QPoly trace = hecke_model_character(mu, basis);
      CHECK(trace == mu_unimodal_character(mu));
      // At q = 1 the trace is the S_n model character.
      CHECK(trace.eval(std::int64_t{1}) == rho_character(consecutive_cycles(mu), basis));
    }
  }
}

TEST_CASE("hexagon fixture, literal values") {
  // Basis w, sws, tswst, stswsts, twt, stwts.
  const auto [ti, tj] = expected_hexagon_blocks();
  REQUIRE(ti.dim() == 6);
  for (std::size_t b : {std::size_t{0}, std::size_t{2}, std::size_t{4}}) {
    CHECK(ti.at(b, b) == 1 - q);
    CHECK(ti.at(b, b + 1) == QPoly(1));
    CHECK(ti.at(b + 1, b) == q);
    CHECK(ti.at(b + 1, b + 1) == QPoly());
  }
  CHECK(ti.nonzeros() == 9);
  CHECK(tj.at(0, 0) == 1 - q);
  CHECK(tj.at(0, 4) == QPoly(1));
  CHECK(tj.at(4, 0) == q);
  CHECK(tj.at(1, 1) == 1 - q);
  CHECK(tj.at(1, 2) == QPoly(1));
  CHECK(tj.at(2, 1) == q);
  CHECK(tj.at(5, 5) == 1 - q);
  CHECK(tj.at(5, 3) == QPoly(1));
  CHECK(tj.at(3, 5) == q);
  CHECK(tj.nonzeros() == 9);
}

TEST_CASE("hexagon blocks in the model") {
  // w = (1,4)(2,5) in S_5 is the minimum of an order-six orbit under <s_1, s_2>.
  const ModelBasis basis(5);
  const Permutation s = Permutation::generator(5, 1), t = Permutation::generator(5, 2);
  const Permutation w = P({4, 5, 3, 1, 2});
  const std::vector<Permutation> orbit{w,
                                       conjugate(s, w),
                                       conjugate(t * s, w),
                                       conjugate(s * t * s, w),
                                       conjugate(t, w),
                                       conjugate(s * t, w)};
  std::vector<std::size_t> positions;
  for (const auto& v : orbit) positions.push_back(basis.index_of(v));
  const auto [ti, tj] = expected_hexagon_blocks();
  CHECK(restrict_to(rho_q_generator(1, basis), positions) == ti);
  CHECK(restrict_to(rho_q_generator(2, basis), positions) == tj);
  const auto gens = rho_q_generators(basis);
  CHECK(check_orbit_shapes(basis, gens).passed);
}

TEST_CASE("relations and specialization") {
  for (int n = 2; n <= 5; ++n) {
    const ModelBasis basis(n);
    const auto gens = rho_q_generators(basis);
    CHECK(check_hecke_relations(basis, gens).passed);
    CHECK(check_specialization(basis, gens).passed);
    for (int i = 1; i < n; ++i) {
      CHECK(specialize(gens[static_cast<std::size_t>(i - 1)], 1) ==
            rho_generator(i, basis).to_poly_matrix());
    }
  }
}

TEST_CASE("poset") {
  const auto order = build_involutive_order(ModelBasis(3));
  CHECK(order.lengths == std::vector<int>{0, 2, 0, 1});
  REQUIRE(order.cover_edges.size() == 2);
  CHECK(order.cover_edges[0] == CoverEdge{2, 3, 2});
  CHECK(order.cover_edges[1] == CoverEdge{3, 1, 1});
  const std::string dot = to_dot(order);
  CHECK(dot.find("w2 -> w3 [label=\"s_2\"]") != std::string::npos);
  CHECK(dot.find("w3 -> w1 [label=\"s_1\"]") != std::string::npos);
  CHECK(to_dot(build_involutive_order(ModelBasis(2))).find("->") == std::string::npos);
  // Covers never leave a cycle type.
  const auto o5 = build_involutive_order(ModelBasis(5));
  for (const auto& e : o5.cover_edges) {
    CHECK(o5.involutions[e.from].k() == o5.involutions[e.to].k());
    CHECK(o5.lengths[e.to] == o5.lengths[e.from] + 1);
  }
}

TEST_CASE("verify_hecke_model") {
  for (int n = 2; n <= 5; ++n) {
    const Report r = verify_hecke_model(n);
    INFO(r.to_text());
    CHECK(r.passed());
  }
  CHECK_THROWS_AS(verify_hecke_model(kHeckeVerifyCap + 1), CapacityError);
}
