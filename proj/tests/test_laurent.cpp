#include <doctest.h>

#include <map>
#include <random>

#include "klv/error.hpp"
#include "klv/laurent.hpp"

using klv::LaurentV;

namespace {

LaurentV random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 5), exps(-6, 6), coeffs(-9, 9);
  LaurentV out;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) out += LaurentV::monomial(coeffs(rng), exps(rng));
  return out;
}

using QMap = std::map<int, mpz_class>;

QMap qmul(const QMap& a, const QMap& b) {
  QMap out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      out[ka + kb] += ca * cb;
      if (out[ka + kb] == 0) out.erase(ka + kb);
    }
  return out;
}

} // namespace

TEST_CASE("multiplication examples") {
  LaurentV a = LaurentV::v(1) + LaurentV::v(-1);
  CHECK(a * a == LaurentV::v(2) + LaurentV(2) + LaurentV::v(-2));
  std::mt19937 rng(7);
  LaurentV b = random_laurent(rng);
  CHECK(LaurentV::one() * b == b);
  CHECK((LaurentV::v(-2) - LaurentV::one()) * LaurentV::v(2) ==
        LaurentV::one() - LaurentV::v(2));
}

TEST_CASE("bar involution examples") {
  CHECK((LaurentV::v(2) + LaurentV::v(1)).bar() == LaurentV::v(-2) + LaurentV::v(-1));
  CHECK(LaurentV(3).bar() == LaurentV(3));
  LaurentV sym = LaurentV::v(1) + LaurentV::v(-1);
  CHECK(sym.bar() == sym);
  CHECK(sym.is_bar_symmetric());
  CHECK_FALSE(LaurentV::v(3).is_bar_symmetric());
}

TEST_CASE("from_q substitutes q = v^{-2}") {
  CHECK(LaurentV::from_q({{1, 1}, {0, -1}}) == LaurentV::v(-2) - LaurentV::one());
  CHECK(LaurentV::from_q_half({{1, 1}}) == LaurentV::v(-1)); // q^{1/2}
  CHECK(LaurentV::from_q({}) == LaurentV::zero());
  CHECK(LaurentV::q(1) == LaurentV::v(-2));
}

TEST_CASE("positive and nonpositive parts") {
  LaurentV a = LaurentV::v(2) + LaurentV::one();
  CHECK(a.positive_part() == LaurentV::v(2));
  CHECK(a.nonpositive_part() == LaurentV::one());
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    LaurentV x = random_laurent(rng);
    CHECK(x.positive_part() + x.nonpositive_part() == x);
  }
}

TEST_CASE("ring axioms on random sparse inputs") {
  std::mt19937 rng(12345);
  for (int i = 0; i < 1000; ++i) {
    LaurentV a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == b * a);
    REQUIRE((a * b).bar() == a.bar() * b.bar());
    REQUIRE(a.bar().bar() == a);
  }
}

TEST_CASE("from_q is multiplicative") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> exps(-3, 3), coeffs(-5, 5), nterms(0, 4);
  for (int i = 0; i < 200; ++i) {
    QMap p, r;
    for (int t = nterms(rng); t > 0; --t) p[exps(rng)] += coeffs(rng);
    for (int t = nterms(rng); t > 0; --t) r[exps(rng)] += coeffs(rng);
    REQUIRE(LaurentV::from_q(p) * LaurentV::from_q(r) == LaurentV::from_q(qmul(p, r)));
  }
}

TEST_CASE("rendering and exact round-trip parsing") {
  CHECK((LaurentV::v(2) + LaurentV(2) + LaurentV::v(-2)).to_string() == "v^2 + 2 + v^-2");
  CHECK(LaurentV::zero().to_string() == "0");
  CHECK((LaurentV::monomial(-1, 1) + LaurentV(3)).to_string() == "-v + 3");
  CHECK((LaurentV::monomial(2, 3) - LaurentV::v(-2)).to_string() == "2*v^3 - v^-2");
  CHECK(LaurentV::parse("v^2 + 2 + v^-2") == LaurentV::v(2) + LaurentV(2) + LaurentV::v(-2));
  CHECK(LaurentV::parse("0") == LaurentV::zero());
  CHECK(LaurentV::parse("-3*v^-4") == LaurentV::monomial(-3, -4));
  CHECK_THROWS_AS(LaurentV::parse("v^"), klv::Error);
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    LaurentV a = random_laurent(rng);
    REQUIRE(LaurentV::parse(a.to_string()) == a);
  }
}

TEST_CASE("exact division") {
  std::mt19937 rng(31);
  for (int i = 0; i < 200; ++i) {
    LaurentV a = random_laurent(rng), b = random_laurent(rng);
    if (b.is_zero()) continue;
    auto quo = LaurentV::div_exact(a * b, b);
    REQUIRE(quo.has_value());
    REQUIRE(*quo == a);
  }
  CHECK_FALSE(LaurentV::div_exact(LaurentV::v(2) + LaurentV::one(),
                                  LaurentV::v(1) + LaurentV::one())
                  .has_value());
  CHECK(LaurentV::div_exact(LaurentV::zero(), LaurentV::v(1)).value() == LaurentV::zero());
}

TEST_CASE("exponent parity helper") {
  LaurentV a = LaurentV::v(3) + LaurentV::v(1);
  CHECK(a.has_exponent_parity(1));
  CHECK_FALSE(a.has_exponent_parity(0));
  CHECK((LaurentV::v(2) + LaurentV::one()).has_exponent_parity(0));
}
