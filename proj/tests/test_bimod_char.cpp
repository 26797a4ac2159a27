#include <doctest.h>

#include <random>

#include "klv/bimod_char.hpp"
#include "klv/error.hpp"

using namespace klv;

namespace {

MPoly random_poly(std::mt19937& rng, int nvars, int maxdeg) {
  std::uniform_int_distribution<int> nterms(1, 4), coeffs(-6, 6);
  auto exps = MPoly::exponents_up_to(nvars, maxdeg);
  std::uniform_int_distribution<std::size_t> pick(0, exps.size() - 1);
  MPoly out(nvars);
  for (int t = nterms(rng); t > 0; --t)
    out += MPoly::monomial(nvars, exps[pick(rng)], coeffs(rng));
  return out;
}

} // namespace

TEST_CASE("mpoly arithmetic and exact division") {
  std::mt19937 rng(41);
  for (int i = 0; i < 100; ++i) {
    MPoly a = random_poly(rng, 2, 3), b = random_poly(rng, 2, 3), c = random_poly(rng, 2, 3);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) {
      auto quo = MPoly::div_exact(a * b, b);
      REQUIRE(quo.has_value());
      REQUIRE(*quo == a);
    }
  }
  MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
  CHECK_FALSE(MPoly::div_exact(x * x + y, x).has_value());
  CHECK(MPoly::div_exact(x * y + y * y, x + y).value() == y);
}

TEST_CASE("Demazure operator examples") {
  auto rings = BimodRings::make(rank1_rings());
  MPoly alpha = rings->alpha(0);
  CHECK(rings->demazure(alpha, 0) == MPoly::constant(1, 2));
  CHECK(rings->demazure(alpha * alpha, 0).is_zero()); // s-invariant
  CHECK(rings->demazure(MPoly::constant(1, 5), 0).is_zero());
  // rank 2: partial s0-invariance
  auto r2 = BimodRings::make(a1xa1_diagonal_rings());
  MPoly a2 = r2->r_var(1);
  CHECK(r2->demazure(a2, 0).is_zero());
  CHECK(r2->demazure(r2->r_var(0), 1).is_zero());
  CHECK(r2->demazure(r2->r_var(0), 0) == MPoly::constant(2, 2));
}

TEST_CASE("Demazure twisted Leibniz rule on random inputs") {
  std::mt19937 rng(4242);
  auto rank1 = BimodRings::make(rank1_rings());
  auto diag = BimodRings::make(a1xa1_diagonal_rings());
  for (int i = 0; i < 200; ++i) {
    {
      MPoly f = random_poly(rng, 1, 3), g = random_poly(rng, 1, 3);
      MPoly lhs = rank1->demazure(f * g, 0);
      MPoly rhs = rank1->demazure(f, 0) * g + rank1->act_s(f, 0) * rank1->demazure(g, 0);
      REQUIRE(lhs == rhs);
      REQUIRE(rank1->act_s(rank1->demazure(f, 0), 0) == rank1->demazure(f, 0));
      REQUIRE(rank1->demazure(rank1->demazure(f, 0), 0).is_zero());
    }
    int s = i % 2;
    MPoly f = random_poly(rng, 2, 3), g = random_poly(rng, 2, 3);
    MPoly lhs = diag->demazure(f * g, s);
    MPoly rhs = diag->demazure(f, s) * g + diag->act_s(f, s) * diag->demazure(g, s);
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("splitting g = g0 + g1 alpha_s reconstructs exactly") {
  std::mt19937 rng(77);
  auto diag = BimodRings::make(a1xa1_diagonal_rings());
  for (int i = 0; i < 100; ++i) {
    int s = i % 2;
    MPoly g = random_poly(rng, 2, 4);
    auto [g0, g1] = diag->split_s(g, s);
    REQUIRE(g0 + g1 * diag->alpha(s) == g);
    REQUIRE(diag->act_s(g0, s) == g0);
    REQUIRE(diag->act_s(g1, s) == g1);
  }
}

TEST_CASE("standard bimodule isomorphism checks") {
  // rank-1 setup: W_K trivial, so only w = e, which is vacuously fine
  auto rank1 = BimodRings::make(rank1_rings());
  CHECK(std_iso_check(*rank1, {}, {0}, 8).ok);
  CHECK(std_iso_check(*rank1, {}, {}, 8).ok);

  // A1 x A1 / diagonal model: P_{w x} ~ P_x for the diagonal reflection
  auto diag = BimodRings::make(a1xa1_diagonal_rings());
  CHECK(std_iso_check(*diag, {0}, {}, 4).ok);
  CHECK(std_iso_check(*diag, {0}, {1}, 4).ok);
  CHECK(std_iso_check(*diag, {0}, {0, 1}, 4).ok);

  // mismatched W_K data (identity on P against the sign action on R) is
  // caught with a witness
  RingsSpec bad = a1xa1_diagonal_rings();
  bad.wk_p_action = {{{1}}};
  auto bad_rings = BimodRings::make(bad);
  BimodReport report = std_iso_check(*bad_rings, {0}, {}, 4);
  CHECK_FALSE(report.ok);
  CHECK_FALSE(report.witness.empty());
}

TEST_CASE("towers present P_x correctly") {
  auto rank1 = BimodRings::make(rank1_rings());
  BimodTower p_id(rank1, {});
  BimodTower p_s(rank1, {0});
  MPoly alpha = rank1->alpha(0);

  // right action twisted by s flips the sign of alpha
  auto e = p_id.basis(0);
  CHECK(p_id.right_act(e, alpha)[0] == alpha);
  CHECK(p_s.right_act(p_s.basis(0), alpha)[0] == -alpha);
}

TEST_CASE("tensor with B_s: free rank-2 presentation equals B_s for both standards") {
  auto rank1 = BimodRings::make(rank1_rings());
  BimodTower p_id_bs(rank1, {}, {0});
  BimodTower p_s_bs(rank1, {0}, {0});
  BimodTower bs(rank1, {}, {0});
  MPoly alpha = rank1->alpha(0);

  // P_id (x) B_s = B_s on the nose
  for (int mask = 0; mask < 2; ++mask)
    for (const MPoly& g : {alpha, alpha * alpha}) {
      auto a = p_id_bs.right_act(p_id_bs.basis(mask), g);
      auto b = bs.right_act(bs.basis(mask), g);
      CHECK(p_id_bs.equal(a, b));
    }
  // P_s (x) B_s = B_s too: the twist is absorbed by the invariant slot
  for (int mask = 0; mask < 2; ++mask)
    for (const MPoly& g : {alpha, alpha * alpha, alpha * alpha * alpha}) {
      auto a = p_s_bs.right_act(p_s_bs.basis(mask), g);
      auto b = bs.right_act(bs.basis(mask), g);
      CHECK(p_s_bs.equal(a, b));
    }
}

TEST_CASE("tensor_Bs graded character identity") {
  auto rank1 = BimodRings::make(rank1_rings());
  BimodTower p_id(rank1, {});
  BimodTower p_s(rank1, {0});
  CHECK(tensor_Bs_check(p_id, 0, 8).ok);
  CHECK(tensor_Bs_check(p_s, 0, 8).ok);
  // iterate once more: (P_id (x) B_s) (x) B_s
  CHECK(tensor_Bs_check(p_id.tensor_Bs(0), 0, 6).ok);

  auto diag = BimodRings::make(a1xa1_diagonal_rings());
  BimodTower p_x(diag, {0});
  CHECK(tensor_Bs_check(p_x, 0, 6).ok);
  CHECK(tensor_Bs_check(p_x, 1, 6).ok);
}

TEST_CASE("grchar values are the expected series") {
  auto rank1 = BimodRings::make(rank1_rings());
  BimodTower p_id(rank1, {});
  GradedChar g = p_id.grchar(6);
  CHECK(g[0] == 1);
  CHECK(g[2] == 1);
  CHECK(g[4] == 1);
  CHECK(g.count(1) == 0);

  BimodTower bs(rank1, {}, {0});
  GradedChar gb = bs.grchar(5);
  CHECK(gb[-1] == 1); // 1 (x) 1 in degree -1
  CHECK(gb[1] == 2);  // alpha (x) 1 and 1 (x) alpha
  CHECK(gb[3] == 2);
}

TEST_CASE("B_s squared decomposes as B_s(1) + B_s(-1)") {
  auto rank1 = BimodRings::make(rank1_rings());
  for (int bound : {6, 8}) {
    BsSquaredReport report = decompose_Bs_squared(rank1, 0, bound);
    CHECK(report.ok);
    CHECK(report.shift_match);
    CHECK(report.witness.empty());
  }
  auto diag = BimodRings::make(a1xa1_diagonal_rings());
  for (int s : {0, 1}) {
    BsSquaredReport report = decompose_Bs_squared(diag, s, 6);
    CHECK(report.ok);
    CHECK(report.shift_match);
  }
}

TEST_CASE("B_s squared degree-0 sanity and character") {
  auto rank1 = BimodRings::make(rank1_rings());
  BimodTower bss(rank1, {}, {0, 0});
  auto e = bss.basis(0);
  // p1 + p2 = id on 1 (x) 1 (x) 1 is part of decompose_Bs_squared; check the
  // graded character against (v + v^{-1})^2 * grchar(R) here
  GradedChar g = bss.grchar(4);
  CHECK(g[-2] == 1);
  CHECK(g[0] == 3);  // (v+v^{-1})^2 = v^2 + 2 + v^{-2} against 1, 1, ...
  CHECK(g[2] == 4);
  CHECK(bss.right_act(e, MPoly::constant(1, 1))[0] == MPoly::constant(1, 1));
}

TEST_CASE("equivariant Poincare series") {
  // SL(2,R): P^K has one generator (degree 1), W has the invariant of degree 2
  auto series = equivariant_poincare({1}, {2}, 1, 20);
  // direct expansion of (1+t^2)/(1-t^2): 1 + 2t^2 + 2t^4 + ...
  CHECK(series[0] == 1);
  for (int i = 2; i <= 20; i += 2) CHECK(series[i] == 2);
  for (int i = 1; i <= 19; i += 2) CHECK(series[i] == 0);

  // degenerate complex-group case: P = R, phi = id gives the series of R
  auto free_series = equivariant_poincare({1, 2}, {1, 2}, 2, 10);
  auto r_series = equivariant_poincare({1, 1}, {1, 1}, 2, 10);
  for (int i = 0; i <= 10; ++i) CHECK(free_series[i] == r_series[i]);
  CHECK(r_series[0] == 1);
  CHECK(r_series[2] == 2);
  CHECK(r_series[4] == 3);

  // truncation at zero
  CHECK(equivariant_poincare({1}, {2}, 1, 0)[0] == 1);

  // inconsistent degree data is reported: a bare (1 - t^4) numerator
  CHECK_THROWS_AS(equivariant_poincare({}, {2}, 0, 8), Error);
}

TEST_CASE("rings validation rejects non-reflections") {
  RingsSpec bad = rank1_rings();
  bad.w_action = {{{1}}}; // s(alpha) = alpha is not a reflection
  CHECK_THROWS_AS(BimodRings::make(bad), Error);
}
