#ifndef KLV_HECKE_HPP
#define KLV_HECKE_HPP

#include <map>
#include <mutex>
#include <vector>

#include "klv/coxeter.hpp"
#include "klv/laurent.hpp"

namespace klv {

/// Element of the Hecke algebra H(W,S) over Z[v^{±1}], stored in the
/// standard basis {delta_x}. No zero coefficients are kept.
class HeckeElt {
public:
  using Coeffs = std::map<GroupElt, LaurentV>;

  HeckeElt() = default;
  explicit HeckeElt(CoxeterPtr sys) : sys_(std::move(sys)) {}

  const CoxeterPtr& system() const { return sys_; }
  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  LaurentV coeff(const GroupElt& x) const;
  void add(const GroupElt& x, const LaurentV& c);

  HeckeElt operator+(const HeckeElt& o) const;
  HeckeElt operator-(const HeckeElt& o) const;
  HeckeElt operator*(const LaurentV& c) const;
  bool operator==(const HeckeElt& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const HeckeElt& o) const { return !(*this == o); }

  /// Pairs (ShortLex word string, coefficient string), in output order.
  std::vector<std::pair<std::string, std::string>> serialized() const;

private:
  CoxeterPtr sys_;
  Coeffs coeffs_;
};

/// The Hecke algebra of a Coxeter system. Multiplication and the bar
/// involution are pure; the Kazhdan-Lusztig basis is memoized behind a lock,
/// so concurrent callers observe correct values.
class HeckeAlgebra {
public:
  explicit HeckeAlgebra(CoxeterPtr sys) : sys_(std::move(sys)) {}

  const CoxeterPtr& system() const { return sys_; }

  HeckeElt zero() const { return HeckeElt(sys_); }
  HeckeElt delta(const GroupElt& x) const;
  HeckeElt unit() const { return delta(sys_->identity()); }
  /// b_s = delta_s + v
  HeckeElt b_s(int s) const;

  /// h * delta_s: delta_x delta_s = delta_{xs} if xs > x, else
  /// delta_{xs} + (v^{-1} - v) delta_x.
  HeckeElt mul_right_delta_s(const HeckeElt& h, int s) const;
  HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;

  /// Ring homomorphism with v -> v^{-1} and delta_x -> delta_{x^{-1}}^{-1}.
  HeckeElt bar_involution(const HeckeElt& h) const;

  /// The self-dual basis element b_x = delta_x + sum_{y<x} h_{y,x} delta_y.
  HeckeElt kl_basis(const GroupElt& x) const;
  LaurentV kl_polynomial(const GroupElt& y, const GroupElt& x) const;

  /// sum_{y <= x} T_y with T_y = v^{-l(y)} delta_y; the caller asserts the
  /// Schubert closure of x is rationally smooth.
  HeckeElt smooth_closure_class(const GroupElt& x) const;

private:
  CoxeterPtr sys_;
  mutable std::mutex cache_mutex_;
  mutable std::map<GroupElt, HeckeElt> kl_cache_;
};

} // namespace klv

#endif
