#include "doctest.h"
#include "medial/analysis.hpp"
#include "medial/bisymmetry.hpp"
#include "medial/expression.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace medial;
using medial::testing::c;
using medial::testing::x;
using medial::testing::worked_example;

namespace {

const ShiftedMonomial kExampleLabel{Rational(9), Rational::parse("1/3"), MultiIndex{1, 1, 1}};

Polynomial sum_of_squares() { return x(2, 0) * x(2, 0) + x(2, 1) * x(2, 1); }

void check_label_reconstructs(const Polynomial& p, const Verdict& v) {
  REQUIRE(is_bisymmetric(v));
  CHECK(label_polynomial(std::get<Bisymmetric>(v).label, p.arity()) == p);
}

}  // namespace

TEST_CASE("bisymmetry difference") {
  CHECK(bisymmetry_difference(pow(x(1, 0), 5) - c(1, 3)).is_zero());
  CHECK(bisymmetry_difference(x(2, 0) + x(2, 1)).is_zero());
  // (x11^2+x12^2)^2 + (x21^2+x22^2)^2 - (x11^2+x21^2)^2 - (x12^2+x22^2)^2,
  // with x11, x12, x21, x22 at positions 0..3
  const Polynomial expected =
      parse("(x1^2 + x2^2)^2 + (x3^2 + x4^2)^2 - (x1^2 + x3^2)^2 - (x2^2 + x4^2)^2", 4);
  const Polynomial d = bisymmetry_difference(sum_of_squares());
  CHECK(d == expected);
  CHECK(d == parse("2*x1^2*x2^2 + 2*x3^2*x4^2 - 2*x1^2*x3^2 - 2*x2^2*x4^2", 4));
  CHECK(bisymmetry_difference(worked_example()).is_zero());
}

TEST_CASE("resource guard") {
  const Polynomial big = pow(x(3, 0) + x(3, 1) + x(3, 2) + c(3, 1), 6);
  CHECK_THROWS_AS(bisymmetry_difference(big, SymbolicConfig{1000}), ResourceExceeded);
  CHECK_THROWS_AS(check_symbolic(big, SymbolicConfig{1000}), ResourceExceeded);
  CHECK(projected_composition_terms(worked_example()) < 5e6);
  CHECK(projected_composition_terms(Polynomial(2)) == 0.0);
}

TEST_CASE("check_symbolic") {
  const Verdict ex = check_symbolic(worked_example());
  REQUIRE(is_bisymmetric(ex));
  CHECK(std::get<Bisymmetric>(ex).label == ClassLabel{kExampleLabel});

  medial::testing::Rng rng(41);
  for (int t = 0; t < 10; ++t) {
    const Polynomial affine = medial::testing::random_affine(rng, 3);
    const Verdict v = check_symbolic(affine);
    check_label_reconstructs(affine, v);
  }

  const Verdict squares = check_symbolic(sum_of_squares());
  REQUIRE_FALSE(is_bisymmetric(squares));
  const auto& nb = std::get<NotBisymmetric>(squares);
  CHECK(nb.witness == SquareMatrix(2, {1, 1, 0, 0}));
  CHECK(nb.lhs == Rational(4));
  CHECK(nb.rhs == Rational(2));
  CHECK(verify_witness(sum_of_squares(), nb));
}

TEST_CASE("check_randomized") {
  const Verdict v = check_randomized(sum_of_squares(), RandomizedConfig{20, 10, 42});
  REQUIRE_FALSE(is_bisymmetric(v));
  CHECK(verify_witness(sum_of_squares(), std::get<NotBisymmetric>(v)));
  CHECK(v == check_randomized(sum_of_squares(), RandomizedConfig{20, 10, 42}));

  medial::testing::Rng rng(42);
  for (int t = 0; t < 10; ++t) {
    const auto affine = medial::testing::random_affine(rng, 3);
    const auto seed = static_cast<std::uint64_t>(t);
    check_label_reconstructs(affine, check_randomized(affine, RandomizedConfig{4, 50, seed}));
  }

  const Verdict ex = check_randomized(worked_example(), RandomizedConfig{5, 100, 7});
  REQUIRE(is_bisymmetric(ex));
  CHECK(std::get<Bisymmetric>(ex).label == ClassLabel{kExampleLabel});

  CHECK_THROWS_AS(check_randomized(x(2, 0), RandomizedConfig{0, 10, 1}), std::invalid_argument);
  CHECK_THROWS_AS(check_randomized(x(2, 0), RandomizedConfig{1, 0, 1}), std::invalid_argument);
}

TEST_CASE("randomized check with a tiny sample range still returns certified verdicts") {
  // bound 1 draws from {-1, 0, 1}; misses are possible, but a rejection must
  // carry a verifying witness and an acceptance falls back to the classifier
  const Polynomial p = x(2, 0) * x(2, 1) + c(2, 1);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Verdict v = check_randomized(p, RandomizedConfig{1, 1, seed});
    REQUIRE_FALSE(is_bisymmetric(v));
    CHECK(verify_witness(p, std::get<NotBisymmetric>(v)));
  }
}

TEST_CASE("classify") {
  const Verdict ex = classify(worked_example());
  REQUIRE(is_bisymmetric(ex));
  CHECK(std::get<Bisymmetric>(ex).label == ClassLabel{kExampleLabel});

  const Polynomial uni = pow(x(3, 0), 5) - c(3, 2) * x(3, 0) + c(3, 7);
  const Verdict u = classify(uni);
  REQUIRE(is_bisymmetric(u));
  const auto* label = std::get_if<Univariate>(&std::get<Bisymmetric>(u).label);
  REQUIRE(label != nullptr);
  CHECK(label->index == 0);
  CHECK(label->body == pow(x(1, 0), 5) - c(1, 2) * x(1, 0) + c(1, 7));
  check_label_reconstructs(uni, u);

  const Polynomial product_plus_one = x(2, 0) * x(2, 1) + c(2, 1);
  const Verdict n = classify(product_plus_one);
  REQUIRE_FALSE(is_bisymmetric(n));
  CHECK(verify_witness(product_plus_one, std::get<NotBisymmetric>(n)));
  CHECK_FALSE(is_bisymmetric(check_symbolic(product_plus_one)));
  // the difference x11*x12 + x21*x22 - x11*x21 - x12*x22 at [[1,1],[0,0]]
  const auto [lhs, rhs] = bisymmetry_sides(product_plus_one, SquareMatrix(2, {1, 1, 0, 0}));
  CHECK(lhs - rhs == Rational(1));
}

TEST_CASE("classify: constants and zero are affine") {
  for (const Polynomial& p : {Polynomial(3), c(3, 4), c(1, -2)}) {
    const Verdict v = classify(p);
    REQUIRE(is_bisymmetric(v));
    CHECK(std::holds_alternative<Affine>(std::get<Bisymmetric>(v).label));
    check_label_reconstructs(p, v);
  }
  const Polynomial lin = c(2, 3) * x(2, 0) - x(2, 1) + c(2, 1);
  const Verdict v = classify(lin);
  REQUIRE(is_bisymmetric(v));
  CHECK(std::get<Affine>(std::get<Bisymmetric>(v).label).coefficients ==
        std::vector<Rational>{1, 3, -1});
}

TEST_CASE("classify: a plain monomial is class (iii) with b = 0") {
  const Polynomial m = Polynomial::monomial(MultiIndex{2, 3}, Rational(-4));
  const Verdict v = classify(m);
  REQUIRE(is_bisymmetric(v));
  CHECK(std::get<Bisymmetric>(v).label ==
        ClassLabel{ShiftedMonomial{Rational(-4), Rational(0), MultiIndex{2, 3}}});
}

TEST_CASE("construct_class_iii") {
  const Rational third = Rational::parse("1/3");
  CHECK(construct_class_iii({Rational(9), third, MultiIndex{1, 1, 1}}) == worked_example());
  CHECK(construct_class_iii({Rational(1), Rational(0), MultiIndex{2, 3}}) ==
        Polynomial::monomial(MultiIndex{2, 3}, Rational(1)));
  CHECK(construct_class_iii({Rational(1), Rational(1), MultiIndex{1, 1}}) ==
        x(2, 0) * x(2, 1) + x(2, 0) + x(2, 1));
  CHECK_THROWS_AS(construct_class_iii({Rational(0), third, MultiIndex{1, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(construct_class_iii({Rational(1), third, MultiIndex{0, 0}}),
                  std::invalid_argument);

  const Polynomial p = construct_class_iii({Rational(5), third, MultiIndex{2, 0, 1}});
  CHECK(degree(p) == 3u);
  CHECK(homogeneous_component(p, 3) == Polynomial::monomial(MultiIndex{2, 0, 1}, Rational(5)));
}

TEST_CASE("integrality") {
  const ClassIIISpec ex{Rational(9), Rational::parse("1/3"), MultiIndex{1, 1, 1}};
  CHECK(integrality_conditions(ex) == std::vector<Rational>{3, 1, 0});
  CHECK(integrality_check(ex));
  CHECK_FALSE(integrality_check({Rational(1), Rational::parse("1/2"), MultiIndex{1, 1}}));
  CHECK(integrality_check({Rational(5), Rational(0), MultiIndex{3, 1}}));
  CHECK_THROWS_AS(integrality_check({Rational::parse("1/2"), Rational(1), MultiIndex{1, 1}}),
                  std::invalid_argument);
}

TEST_CASE("integrality conditions characterise integer coefficients") {
  medial::testing::Rng rng(43);
  int positives = 0;
  for (int t = 0; t < 100; ++t) {
    const auto n = medial::testing::uniform_size(rng, 1, 3);
    ClassIIISpec spec = medial::testing::random_class_iii_spec(rng, n, 4);
    spec.a = Rational(medial::testing::uniform_int(rng, 1, 27) *
                      (medial::testing::uniform_int(rng, 0, 1) ? 1 : -1));
    // denominators sharing factors with a make the interesting cases reachable
    spec.b = Rational(mpz_class(medial::testing::uniform_int(rng, -6, 6)),
                      mpz_class(medial::testing::uniform_int(rng, 1, 3)));
    const Polynomial p = construct_class_iii(spec);
    const bool all_integer = std::all_of(p.terms().begin(), p.terms().end(),
                                         [](const auto& kv) { return kv.second.is_integer(); });
    CHECK(integrality_check(spec) == all_integer);
    positives += all_integer ? 1 : 0;
  }
  CHECK(positives > 0);
  CHECK(positives < 100);
}
