#include "klv/laurent.hpp"

#include <cctype>
#include <sstream>

#include "klv/error.hpp"

namespace klv {

void LaurentV::set(int k, const mpz_class& c) {
  if (c == 0)
    coeffs_.erase(k);
  else
    coeffs_[k] = c;
}

LaurentV LaurentV::monomial(const mpz_class& c, int k) {
  LaurentV r;
  r.set(k, c);
  return r;
}

LaurentV LaurentV::from_q(const Coeffs& q_poly) {
  LaurentV r;
  for (const auto& [k, c] : q_poly) r.set(-2 * k, c);
  return r;
}

LaurentV LaurentV::from_q_half(const Coeffs& half_q_poly) {
  LaurentV r;
  for (const auto& [n, c] : half_q_poly) r.set(-n, c);
  return r;
}

mpz_class LaurentV::coeff(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? mpz_class(0) : it->second;
}

int LaurentV::min_exp() const {
  if (is_zero()) throw Error(Errc::bad_input, "min_exp of zero polynomial");
  return coeffs_.begin()->first;
}

int LaurentV::max_exp() const {
  if (is_zero()) throw Error(Errc::bad_input, "max_exp of zero polynomial");
  return coeffs_.rbegin()->first;
}

LaurentV LaurentV::operator-() const {
  LaurentV r;
  for (const auto& [k, c] : coeffs_) r.coeffs_[k] = -c;
  return r;
}

LaurentV LaurentV::operator+(const LaurentV& o) const {
  LaurentV r = *this;
  for (const auto& [k, c] : o.coeffs_) {
    auto it = r.coeffs_.find(k);
    if (it == r.coeffs_.end()) {
      r.coeffs_[k] = c;
    } else {
      it->second += c;
      if (it->second == 0) r.coeffs_.erase(it);
    }
  }
  return r;
}

LaurentV LaurentV::operator-(const LaurentV& o) const { return *this + (-o); }

LaurentV LaurentV::operator*(const LaurentV& o) const {
  LaurentV r;
  for (const auto& [ka, ca] : coeffs_)
    for (const auto& [kb, cb] : o.coeffs_) {
      int k = ka + kb;
      auto it = r.coeffs_.find(k);
      if (it == r.coeffs_.end()) {
        mpz_class p = ca * cb;
        if (p != 0) r.coeffs_[k] = p;
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.coeffs_.erase(it);
      }
    }
  return r;
}

LaurentV LaurentV::bar() const {
  LaurentV r;
  for (const auto& [k, c] : coeffs_) r.coeffs_[-k] = c;
  return r;
}

LaurentV LaurentV::positive_part() const {
  LaurentV r;
  for (const auto& [k, c] : coeffs_)
    if (k > 0) r.coeffs_[k] = c;
  return r;
}

LaurentV LaurentV::nonpositive_part() const {
  LaurentV r;
  for (const auto& [k, c] : coeffs_)
    if (k <= 0) r.coeffs_[k] = c;
  return r;
}

bool LaurentV::all_coeffs_nonnegative() const {
  for (const auto& [k, c] : coeffs_)
    if (c < 0) return false;
  return true;
}

bool LaurentV::has_exponent_parity(int parity) const {
  parity = ((parity % 2) + 2) % 2;
  for (const auto& [k, c] : coeffs_) {
    (void)c;
    if (((k % 2) + 2) % 2 != parity) return false;
  }
  return true;
}

std::optional<LaurentV> LaurentV::div_exact(const LaurentV& a, const LaurentV& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return LaurentV::zero();
  // Peel from the lowest exponent; Z[v^{±1}] is a domain, so if b | a the
  // quotient's lowest term is forced at every step.
  LaurentV rem = a;
  LaurentV quot;
  int b_lo = b.min_exp();
  mpz_class b_lead = b.coeff(b_lo);
  // an exact quotient has exponents in [a_lo - b_lo, a_hi - b_hi]
  int quot_max = a.max_exp() - b.max_exp();
  while (!rem.is_zero()) {
    int r_lo = rem.min_exp();
    if (r_lo - b_lo > quot_max) return std::nullopt;
    mpz_class r_lead = rem.coeff(r_lo);
    if (r_lead % b_lead != 0) return std::nullopt;
    LaurentV term = monomial(r_lead / b_lead, r_lo - b_lo);
    quot += term;
    rem -= term * b;
  }
  return quot;
}

std::string LaurentV::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    int k = it->first;
    const mpz_class& c = it->second;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << "*";
      out << "v";
      if (k != 1) out << "^" << k;
    }
  }
  return out.str();
}

namespace {

void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

// digits with optional leading '-'
bool read_int(const std::string& s, size_t& i, mpz_class& out) {
  size_t start = i;
  if (i < s.size() && s[i] == '-') ++i;
  size_t digits = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == digits) {
    i = start;
    return false;
  }
  out = mpz_class(s.substr(start, i - start));
  return true;
}

} // namespace

LaurentV LaurentV::parse(const std::string& text) {
  LaurentV result;
  size_t i = 0;
  skip_ws(text, i);
  if (i >= text.size()) throw Error(Errc::bad_input, "empty Laurent polynomial");
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    skip_ws(text, i);
    if (!first) {
      if (text[i] == '+') {
        ++i;
      } else if (text[i] == '-') {
        sign = -1;
        ++i;
      } else {
        throw Error(Errc::bad_input, "expected '+' or '-' in: " + text);
      }
      skip_ws(text, i);
    } else if (text[i] == '-') {
      sign = -1;
      ++i;
      skip_ws(text, i);
    }
    first = false;

    mpz_class c = 1;
    bool have_coeff = read_int(text, i, c);
    skip_ws(text, i);
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip_ws(text, i);
    }
    int k = 0;
    if (i < text.size() && text[i] == 'v') {
      ++i;
      k = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        mpz_class e;
        if (!read_int(text, i, e)) throw Error(Errc::bad_input, "bad exponent in: " + text);
        k = static_cast<int>(e.get_si());
      }
    } else if (!have_coeff) {
      throw Error(Errc::bad_input, "expected term in: " + text);
    }
    result += monomial(sign * c, k);
    skip_ws(text, i);
  }
  return result;
}

} // namespace klv
