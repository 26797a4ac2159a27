#include "klv/hecke.hpp"

#include <algorithm>

#include "klv/error.hpp"

namespace klv {

LaurentV HeckeElt::coeff(const GroupElt& x) const {
  auto it = coeffs_.find(x);
  return it == coeffs_.end() ? LaurentV::zero() : it->second;
}

void HeckeElt::add(const GroupElt& x, const LaurentV& c) {
  if (c.is_zero()) return;
  auto it = coeffs_.find(x);
  if (it == coeffs_.end()) {
    coeffs_.emplace(x, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

HeckeElt HeckeElt::operator+(const HeckeElt& o) const {
  HeckeElt r = *this;
  if (!r.sys_) r.sys_ = o.sys_;
  for (const auto& [x, c] : o.coeffs_) r.add(x, c);
  return r;
}

HeckeElt HeckeElt::operator-(const HeckeElt& o) const {
  HeckeElt r = *this;
  if (!r.sys_) r.sys_ = o.sys_;
  for (const auto& [x, c] : o.coeffs_) r.add(x, -c);
  return r;
}

HeckeElt HeckeElt::operator*(const LaurentV& c) const {
  HeckeElt r(sys_);
  if (c.is_zero()) return r;
  for (const auto& [x, cx] : coeffs_) r.add(x, cx * c);
  return r;
}

std::vector<std::pair<std::string, std::string>> HeckeElt::serialized() const {
  std::vector<GroupElt> support;
  for (const auto& [x, c] : coeffs_) support.push_back(x);
  std::sort(support.begin(), support.end(), output_less);
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& x : support) out.emplace_back(word_string(x), coeff(x).to_string());
  return out;
}

HeckeElt HeckeAlgebra::delta(const GroupElt& x) const {
  if (!x.system()->same_as(*sys_))
    throw Error(Errc::mixed_systems, "element belongs to a different Coxeter system");
  HeckeElt h(sys_);
  h.add(x, LaurentV::one());
  return h;
}

HeckeElt HeckeAlgebra::b_s(int s) const {
  HeckeElt h = delta(sys_->generator(s));
  h.add(sys_->identity(), LaurentV::v(1));
  return h;
}

HeckeElt HeckeAlgebra::mul_right_delta_s(const HeckeElt& h, int s) const {
  HeckeElt r(sys_);
  GroupElt gs = sys_->generator(s);
  LaurentV vinv_minus_v = LaurentV::v(-1) - LaurentV::v(1);
  for (const auto& [x, c] : h.coeffs()) {
    GroupElt xs = x * gs;
    if (x.is_right_descent(s)) {
      r.add(xs, c);
      r.add(x, c * vinv_minus_v);
    } else {
      r.add(xs, c);
    }
  }
  return r;
}

HeckeElt HeckeAlgebra::mul(const HeckeElt& a, const HeckeElt& b) const {
  HeckeElt r(sys_);
  for (const auto& [y, c] : b.coeffs()) {
    HeckeElt term = a;
    for (int s : y.reduced_word()) term = mul_right_delta_s(term, s);
    r = r + term * c;
  }
  return r;
}

HeckeElt HeckeAlgebra::bar_involution(const HeckeElt& h) const {
  HeckeElt r(sys_);
  LaurentV v_minus_vinv = LaurentV::v(1) - LaurentV::v(-1);
  for (const auto& [x, c] : h.coeffs()) {
    // bar(delta_x) = (delta_{x^{-1}})^{-1} = prod over the word of x of
    // delta_s^{-1} = delta_s + (v - v^{-1}).
    HeckeElt term = unit();
    for (int s : x.reduced_word()) {
      HeckeElt factor = delta(sys_->generator(s));
      factor.add(sys_->identity(), v_minus_vinv);
      term = mul(term, factor);
    }
    r = r + term * c.bar();
  }
  return r;
}

HeckeElt HeckeAlgebra::kl_basis(const GroupElt& x) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = kl_cache_.find(x);
    if (it != kl_cache_.end()) return it->second;
  }
  HeckeElt result;
  if (x.is_identity()) {
    result = unit();
  } else {
    int s = *right_descents(x).begin();
    GroupElt xs = x * sys_->generator(s);
    HeckeElt cand = mul(kl_basis(xs), b_s(s));
    // Strip degree-0 parts top-down; b_y has support strictly below y, so the
    // coefficients already cleaned stay in vZ[v].
    std::vector<GroupElt> support;
    for (const auto& [y, c] : cand.coeffs())
      if (y != x) support.push_back(y);
    std::sort(support.begin(), support.end(), [](const GroupElt& a, const GroupElt& b) {
      int la = a.length(), lb = b.length();
      if (la != lb) return la > lb;
      return b < a;
    });
    for (const auto& y : support) {
      mpz_class mu0 = cand.coeff(y).coeff(0);
      if (mu0 != 0) cand = cand - kl_basis(y) * LaurentV(mu0);
    }
    result = cand;
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto [it, inserted] = kl_cache_.emplace(x, result);
  (void)inserted;
  return it->second;
}

LaurentV HeckeAlgebra::kl_polynomial(const GroupElt& y, const GroupElt& x) const {
  return kl_basis(x).coeff(y);
}

HeckeElt HeckeAlgebra::smooth_closure_class(const GroupElt& x) const {
  HeckeElt r(sys_);
  for (const auto& y : lower_interval(x)) r.add(y, LaurentV::v(-y.length()));
  return r;
}

} // namespace klv
