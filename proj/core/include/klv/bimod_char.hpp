#ifndef KLV_BIMOD_CHAR_HPP
#define KLV_BIMOD_CHAR_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "klv/mpoly.hpp"

namespace klv {

/// Graded dimensions: exponent of v -> dimension, truncated to a degree bound.
/// Convention: grchar(M) = sum dim(M^i) v^i with M(n)^i = M^{n+i}, so
/// grchar(M(1)) = v^{-1} grchar(M).
using GradedChar = std::map<int, mpz_class>;

/// Ring data for the algebraic side: R with a linear W-action and simple
/// roots, P with the restriction map phi, and W_K acting compatibly on both.
/// All generators sit in degree 2; coefficients are exact rationals.
struct RingsSpec {
  std::vector<std::string> r_gens;
  std::vector<std::string> p_gens;
  std::vector<std::vector<long>> simple_roots;              // per s: alpha_s in r_gen coords
  std::vector<std::vector<std::vector<long>>> w_action;     // per s: s(gen_j) = sum_i M[i][j] gen_i
  std::vector<std::vector<long>> phi;                       // phi(r_gen_j) = sum_i phi[i][j] p_gen_i
  std::vector<std::vector<int>> wk_words;                   // W_K generators as words in S
  std::vector<std::vector<std::vector<long>>> wk_p_action;  // per W_K generator: matrix on p_gens
};

/// R = P = Q[alpha], s(alpha) = -alpha, phi = id, trivial W_K.
RingsSpec rank1_rings();
/// R = Q[a1,a2], P = Q[b], phi the sum map, W_K the diagonal reflection s0s1.
RingsSpec a1xa1_diagonal_rings();

class BimodRings {
public:
  static std::shared_ptr<const BimodRings> make(RingsSpec spec);
  /// Same R, but P := R with phi = id and no W_K (the Soergel-bimodule side).
  std::shared_ptr<const BimodRings> regular() const;

  const RingsSpec& spec() const { return spec_; }
  int rank_s() const { return static_cast<int>(spec_.w_action.size()); }
  int n_r() const { return static_cast<int>(spec_.r_gens.size()); }
  int n_p() const { return static_cast<int>(spec_.p_gens.size()); }

  MPoly r_var(int i) const { return MPoly::variable(n_r(), i); }
  MPoly p_var(int i) const { return MPoly::variable(n_p(), i); }
  const MPoly& alpha(int s) const { return alphas_.at(s); }

  MPoly act_s(const MPoly& f, int s) const;
  /// w = s_1 ... s_m acts by f -> s_1(s_2(... s_m(f))).
  MPoly act_word(const MPoly& f, const std::vector<int>& word) const;
  MPoly phi(const MPoly& f) const;
  MPoly act_wk_gen(const MPoly& p, int k) const;
  MPoly act_p_matrix(const MPoly& p, const std::vector<std::vector<mpq_class>>& m) const;
  std::vector<std::vector<mpq_class>> wk_word_matrix(const std::vector<int>& wk_word) const;

  /// Demazure operator (f - sf)/alpha_s; the division is always exact.
  MPoly demazure(const MPoly& f, int s) const;
  /// g = g0 + g1*alpha_s with g0, g1 s-invariant; g1 = demazure(g)/2.
  std::pair<MPoly, MPoly> split_s(const MPoly& g, int s) const;

  GradedChar series_r(int bound) const;
  GradedChar series_p(int bound) const;
  /// Orbit-sum spanning set of P^{W_K} through polynomial degree maxdeg.
  std::vector<MPoly> invariant_spanning_set(int maxdeg) const;

private:
  explicit BimodRings(RingsSpec spec);
  RingsSpec spec_;
  std::vector<MPoly> alphas_;
  std::vector<std::vector<std::vector<mpq_class>>> w_mats_;
  std::vector<std::vector<std::vector<mpq_class>>> wk_mats_;
};

/// Free left-P presentation of the tower P_x (x) B_{s_1} (x) ... (x) B_{s_k}.
/// Elements are vectors of 2^k polynomials in P; basis mask bit i set means
/// the alpha_{s_i} basis element in factor i. Basis ring degree is
/// sum_{i in mask} 2 - k (each factor carries a (1) shift).
class BimodTower {
public:
  BimodTower(std::shared_ptr<const BimodRings> rings, std::vector<int> x_word,
             std::vector<int> bs_word = {});

  using Elem = std::vector<MPoly>;

  const std::shared_ptr<const BimodRings>& rings() const { return rings_; }
  const std::vector<int>& x_word() const { return x_word_; }
  const std::vector<int>& bs_word() const { return bs_word_; }
  int factors() const { return static_cast<int>(bs_word_.size()); }
  int rank() const { return 1 << factors(); }

  Elem zero() const;
  Elem basis(int mask) const;
  Elem add(const Elem& a, const Elem& b) const;
  bool equal(const Elem& a, const Elem& b) const;
  Elem left_mul(const MPoly& f, const Elem& e) const;
  Elem right_act(const Elem& e, const MPoly& g) const;

  BimodTower tensor_Bs(int s) const;

  int basis_degree(int mask) const;
  GradedChar grchar(int bound) const;

  std::string elem_to_string(const Elem& e) const;

private:
  Elem right_act_level(const Elem& e, const MPoly& g, int level) const;

  std::shared_ptr<const BimodRings> rings_;
  std::vector<int> x_word_;
  std::vector<int> bs_word_;
};

struct BimodReport {
  bool ok = true;
  std::string witness; // failing monomial / identity when !ok
};

/// Verifies w^{-1}(f p) = f w^{-1}(p) and w^{-1}(p phi(wx g)) = (w^{-1} p) phi(x g)
/// on all monomials of ring degree <= degree_bound. `wk_word` indexes the
/// W_K generators of the spec.
BimodReport std_iso_check(const BimodRings& rings, const std::vector<int>& wk_word,
                          const std::vector<int>& x_word, int degree_bound);

/// Graded-character identity grchar(M (x) B_s) = (v + v^{-1}) grchar(M) plus
/// bimodule-axiom spot checks on the rank-2 presentation.
BimodReport tensor_Bs_check(const BimodTower& m, int s, int degree_bound);

struct BsSquaredReport {
  bool ok = true;
  bool shift_match = false; // images match grchar of B_s(1) and B_s(-1)
  std::string witness;
};

/// Splits B_s (x) B_s through the middle-slot splitting R = R^s + R^s alpha_s:
/// verifies the idempotent pair and the isomorphisms onto B_s(+-1).
BsSquaredReport decompose_Bs_squared(const std::shared_ptr<const BimodRings>& rings, int s,
                                     int degree_bound);

/// Truncated series of P^{W_K} (x)_{R^W} R from fundamental invariant degrees:
/// prod (1-t^{2d_K})^{-1} * prod (1-t^{2d_G}) / (1-t^2)^{n_T}, coefficients
/// [0..bound]. Throws when the truncated quotient has a negative coefficient.
std::vector<mpz_class> equivariant_poincare(const std::vector<int>& degrees_K,
                                            const std::vector<int>& degrees_G, int n_T,
                                            int bound);

} // namespace klv

#endif
