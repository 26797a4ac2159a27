#ifndef KLV_LAURENT_HPP
#define KLV_LAURENT_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

namespace klv {

/// Exact Laurent polynomial in the variable v with arbitrary-precision
/// integer coefficients. The q-coordinate convention is q = v^{-2}; any
/// interface that speaks of q^{1/2} renders it as v^{-1}.
///
/// Values are immutable in spirit: every operation returns a normalized
/// copy (no zero coefficients stored), so they are safe to share across
/// threads.
class LaurentV {
public:
  using Coeffs = std::map<int, mpz_class>;

  LaurentV() = default;
  explicit LaurentV(long constant) { set(0, mpz_class(constant)); }
  explicit LaurentV(const mpz_class& constant) { set(0, constant); }

  static LaurentV zero() { return LaurentV(); }
  static LaurentV one() { return LaurentV(1); }
  /// c * v^k
  static LaurentV monomial(const mpz_class& c, int k);
  /// v^k
  static LaurentV v(int k = 1) { return monomial(1, k); }
  /// q^k = v^{-2k}
  static LaurentV q(int k = 1) { return monomial(1, -2 * k); }

  /// Substitute q = v^{-2} into a polynomial given by {exponent of q -> coeff}.
  static LaurentV from_q(const Coeffs& q_poly);
  /// Half-integer input mode: key n stands for q^{n/2} and maps to v^{-n}.
  static LaurentV from_q_half(const Coeffs& half_q_poly);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return *this == one(); }
  const Coeffs& coeffs() const { return coeffs_; }
  mpz_class coeff(int k) const;
  int min_exp() const; // requires non-zero
  int max_exp() const; // requires non-zero

  LaurentV operator-() const;
  LaurentV operator+(const LaurentV& o) const;
  LaurentV operator-(const LaurentV& o) const;
  LaurentV operator*(const LaurentV& o) const;
  LaurentV& operator+=(const LaurentV& o) { return *this = *this + o; }
  LaurentV& operator-=(const LaurentV& o) { return *this = *this - o; }
  LaurentV& operator*=(const LaurentV& o) { return *this = *this * o; }
  bool operator==(const LaurentV& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentV& o) const { return !(*this == o); }
  bool operator<(const LaurentV& o) const { return coeffs_ < o.coeffs_; }

  /// The bar involution v -> v^{-1}.
  LaurentV bar() const;
  bool is_bar_symmetric() const { return bar() == *this; }
  /// Terms with exponent > 0.
  LaurentV positive_part() const;
  /// Terms with exponent <= 0; positive_part() + nonpositive_part() == *this.
  LaurentV nonpositive_part() const;

  bool all_coeffs_nonnegative() const;
  /// True when every exponent is congruent to `parity` mod 2.
  bool has_exponent_parity(int parity) const;

  /// Exact division; nullopt when b does not divide a over Z[v^{±1}].
  static std::optional<LaurentV> div_exact(const LaurentV& a, const LaurentV& b);

  /// Renders "c*v^k + ..." with exponents in decreasing order ("0" for zero).
  std::string to_string() const;
  /// Exact inverse of to_string; throws Errc::bad_input on malformed text.
  static LaurentV parse(const std::string& text);

private:
  void set(int k, const mpz_class& c);
  Coeffs coeffs_;
};

inline LaurentV operator*(const mpz_class& c, const LaurentV& a) {
  return LaurentV::monomial(c, 0) * a;
}
inline LaurentV operator*(long c, const LaurentV& a) { return mpz_class(c) * a; }

} // namespace klv

#endif
