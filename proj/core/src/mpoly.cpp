#include "klv/mpoly.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "klv/error.hpp"

namespace klv {

bool MPoly::MonoLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

MPoly MPoly::constant(int nvars, const mpq_class& c) {
  MPoly p(nvars);
  p.add_term(std::vector<int>(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw Error(Errc::bad_input, "variable index out of range");
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  return monomial(nvars, e, 1);
}

MPoly MPoly::monomial(int nvars, const std::vector<int>& exps, const mpq_class& c) {
  if (static_cast<int>(exps.size()) != nvars)
    throw Error(Errc::bad_input, "exponent vector has wrong length");
  MPoly p(nvars);
  p.add_term(exps, c);
  return p;
}

void MPoly::add_term(const std::vector<int>& exps, const mpq_class& c) {
  if (c == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MPoly::total_degree() const {
  if (terms_.empty()) return 0;
  auto& top = terms_.rbegin()->first;
  return std::accumulate(top.begin(), top.end(), 0);
}

mpq_class MPoly::coeff(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

MPoly MPoly::operator-() const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  if (r.nvars_ == 0) r.nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r(nvars_ ? nvars_ : o.nvars_);
  std::vector<int> e(r.nvars_, 0);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MPoly MPoly::operator*(const mpq_class& c) const {
  MPoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, cc] : terms_) r.terms_[e] = cc * c;
  return r;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw Error(Errc::bad_input, "substitute needs one image per variable");
  int out_vars = images.empty() ? nvars_ : images[0].nvars();
  MPoly r(out_vars);
  for (const auto& [e, c] : terms_) {
    MPoly term = MPoly::constant(out_vars, c);
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) term *= images[i];
    r += term;
  }
  return r;
}

MPoly MPoly::apply_linear(const std::vector<std::vector<mpq_class>>& mat) const {
  // var_j -> sum_i mat[i][j] var_i
  int out_vars = static_cast<int>(mat.size());
  std::vector<MPoly> images;
  for (int j = 0; j < nvars_; ++j) {
    MPoly img(out_vars);
    for (int i = 0; i < out_vars; ++i) {
      if (static_cast<int>(mat[i].size()) != nvars_)
        throw Error(Errc::bad_input, "linear substitution matrix has wrong shape");
      img += MPoly::variable(out_vars, i) * mat[i][j];
    }
    images.push_back(img);
  }
  return substitute(images);
}

std::optional<MPoly> MPoly::div_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) return std::nullopt;
  MPoly rem = a;
  MPoly quot(a.nvars());
  const auto& bl = *b.terms_.rbegin(); // leading term in (degree, lex) order
  while (!rem.is_zero()) {
    const auto& rl = *rem.terms_.rbegin();
    std::vector<int> e(rem.nvars(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = rl.first[i] - bl.first[i];
      if (e[i] < 0) return std::nullopt; // leading monomial not divisible
    }
    MPoly t = MPoly::monomial(rem.nvars(), e, rl.second / bl.second);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpq_class a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool any_var = false;
    std::ostringstream vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any_var) vars << "*";
      vars << names.at(i);
      if (e[i] != 1) vars << "^" << e[i];
      any_var = true;
    }
    if (!any_var) {
      out << a;
    } else {
      if (a != 1) out << a << "*";
      out << vars.str();
    }
  }
  return out.str();
}

std::vector<std::vector<int>> MPoly::exponents_up_to(int nvars, int maxdeg) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(nvars, 0);
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i == nvars) {
      out.push_back(cur);
      return;
    }
    for (int d = 0; d <= remaining; ++d) {
      cur[i] = d;
      rec(i + 1, remaining - d);
    }
    cur[i] = 0;
  };
  rec(0, maxdeg);
  return out;
}

} // namespace klv
