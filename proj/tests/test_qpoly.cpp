#include <doctest.h>

#include <limits>
#include <random>

#include "gelfand/errors.hpp"
#include "gelfand/qpoly.hpp"

using namespace gelfand;

namespace {

const QPoly q = QPoly::q();

QPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(-1, 4);
  std::uniform_int_distribution<std::int64_t> c(-5, 5);
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& x : coeffs) x = c(rng);
  return QPoly::from_coeffs(coeffs);
}

PolyMatrix random_matrix(std::mt19937_64& rng, std::size_t dim) {
  PolyMatrix m(dim);
  std::uniform_int_distribution<int> coin(0, 2);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      if (coin(rng) == 0) m.set(r, c, random_poly(rng));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("arithmetic") {
  CHECK((1 - q) + q == QPoly(1));
  CHECK((-q) * (-q) == pow(q, 2));
  CHECK(((1 + q) * (1 - q)) == 1 - pow(q, 2));
  CHECK(QPoly::from_coeffs({1, 2, 0, 0}).degree() == 1);
  CHECK(QPoly().degree() == -1);
  CHECK((q - q).is_zero());
  CHECK(pow(q, 0) == QPoly(1));
}

TEST_CASE("evaluation") {
  CHECK((1 - q).eval(std::int64_t{1}) == 0);
  CHECK(pow(-q, 2).eval(std::int64_t{1}) == 1);
  CHECK((1 - q + pow(q, 2)).eval(std::int64_t{1}) == 1);
  CHECK((1 - q + pow(q, 2)).eval(Rational(1, 2)) == Rational(3, 4));
  CHECK((2 - 2 * q).eval(std::int64_t{-3}) == 8);
}

TEST_CASE("printing") {
  CHECK(QPoly().to_string() == "0");
  CHECK((1 - q + pow(q, 2)).to_string() == "1 - q + q^2");
  CHECK((2 - 2 * q).to_string() == "2 - 2q");
  CHECK((-q).to_string() == "-q");
  CHECK((-1 + 3 * pow(q, 3)).to_string() == "-1 + 3q^3");
}

TEST_CASE("overflow is an error") {
  const QPoly big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + QPoly(1), ArithmeticError);
  CHECK_THROWS_AS(big * QPoly(2), ArithmeticError);
  CHECK_THROWS_AS(pow(QPoly(3), 50), ArithmeticError);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const QPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == QPoly());
    CHECK((a * b).eval(std::int64_t{2}) == a.eval(std::int64_t{2}) * b.eval(std::int64_t{2}));
  }
}

TEST_CASE("matrices") {
  PolyMatrix t(2);
  t.set(0, 0, 1);
  t.set(1, 1, -q);
  CHECK(mat_trace(t) == 1 - q);
  CHECK(mat_trace(mat_identity(10)) == QPoly(10));
  CHECK(mat_mul(mat_identity(2), t) == t);
  // (T + q)(T - 1) = 0
  const PolyMatrix id = mat_identity(2);
  CHECK(mat_mul(t + q * id, t - id) == PolyMatrix(2));
  CHECK(t.nonzeros() == 2);
  t.set(0, 0, 0);
  CHECK(t.nonzeros() == 1);
  CHECK_THROWS_AS(t.set(2, 0, 1), SizeError);
  CHECK_THROWS_AS(mat_mul(t, mat_identity(3)), SizeError);
  CHECK(specialize(t, 1).at(1, 1) == QPoly(-1));
}

TEST_CASE("matrix properties on random inputs") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 40; ++t) {
    const std::size_t dim = 1 + static_cast<std::size_t>(t % 6);
    const PolyMatrix a = random_matrix(rng, dim), b = random_matrix(rng, dim), c = random_matrix(rng, dim);
    const PolyMatrix ab = mat_mul(a, b);
    CHECK(ab == serial::mat_mul(a, b));
    CHECK(mat_trace(ab) == mat_trace(mat_mul(b, a)));
    CHECK(mat_mul(ab, c) == mat_mul(a, mat_mul(b, c)));
    CHECK(mat_mul(a, b + c) == ab + mat_mul(a, c));
    CHECK(mat_product({&a, &b, &c}, dim) == mat_mul(ab, c));
    CHECK(specialize(ab, 2) == mat_mul(specialize(a, 2), specialize(b, 2)));
  }
  CHECK(mat_product({}, 3) == mat_identity(3));
}

TEST_CASE("canonical JSON round trip") {
  PolyMatrix t(2);
  t.set(0, 0, 1);
  t.set(1, 1, -q);
  CHECK(to_canonical_json(t) == R"({"dim":2,"entries":[[0,0,[1]],[1,1,[0,-1]]]})");
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    const PolyMatrix m = random_matrix(rng, 5);
    CHECK(poly_matrix_from_json(to_json(m)) == m);
    CHECK(to_canonical_json(m) == to_canonical_json(poly_matrix_from_json(nlohmann::json::parse(to_canonical_json(m)))));
  }
}
