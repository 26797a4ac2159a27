#ifndef KLV_MPOLY_HPP
#define KLV_MPOLY_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace klv {

/// Sparse multivariate polynomial over Q with a fixed variable count.
/// Exponent vectors are totally ordered by (total degree, lex), which is the
/// order used for exact single-divisor division.
class MPoly {
public:
  struct MonoLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
  };
  using Terms = std::map<std::vector<int>, mpq_class, MonoLess>;

  MPoly() = default;
  explicit MPoly(int nvars) : nvars_(nvars) {}

  static MPoly constant(int nvars, const mpq_class& c);
  static MPoly variable(int nvars, int i);
  static MPoly monomial(int nvars, const std::vector<int>& exps, const mpq_class& c);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const; // 0 for the zero polynomial
  mpq_class coeff(const std::vector<int>& exps) const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const mpq_class& c) const;
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  /// Substitute variable i -> images[i] (all images over the same ring).
  MPoly substitute(const std::vector<MPoly>& images) const;
  /// Linear change of variables: var_j -> sum_i mat[i][j] * var_i.
  MPoly apply_linear(const std::vector<std::vector<mpq_class>>& mat) const;

  /// Exact division; nullopt when b does not divide a.
  static std::optional<MPoly> div_exact(const MPoly& a, const MPoly& b);

  std::string to_string(const std::vector<std::string>& names) const;

  /// All exponent vectors in `nvars` variables of total degree <= maxdeg.
  static std::vector<std::vector<int>> exponents_up_to(int nvars, int maxdeg);

private:
  void add_term(const std::vector<int>& exps, const mpq_class& c);
  int nvars_ = 0;
  Terms terms_;
};

} // namespace klv

#endif
