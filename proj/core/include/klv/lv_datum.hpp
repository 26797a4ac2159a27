#ifndef KLV_LV_DATUM_HPP
#define KLV_LV_DATUM_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "klv/coxeter.hpp"
#include "klv/laurent.hpp"

namespace klv {

/// One element of the parameter set D: a K-orbit together with an
/// irreducible equivariant local system on it.
struct Param {
  std::string id;
  std::string orbit;
  int dim = 0;
  std::string local_system = "triv";
  bool trivial_ls = true;
  bool closed_orbit = false;
  bool declared_clean = false;
};

/// Root-type case labels: compact imaginary (a), complex ascent/descent
/// (b1/b2), type II noncompact imaginary/real (c1/c2), type I noncompact
/// imaginary/real (d1/d2), real nonparity (e).
enum class RootCase { a, b1, b2, c1, c2, d1, d2, e };

const char* root_case_name(RootCase c);
RootCase parse_root_case(const std::string& name);
int root_case_arity(RootCase c);

struct CaseEntry {
  RootCase kind = RootCase::a;
  std::vector<int> targets; // param indices; order is significant for c2/d1
};

struct Violation {
  std::string code;
  std::string param;
  int s = -1;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool quadratic_checked = false;
  bool braid_checked = false;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Sparse module element over the parameter set; keys are param indices.
class LVVector {
public:
  using Coeffs = std::map<int, LaurentV>;

  LVVector() = default;
  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  LaurentV coeff(int p) const;
  void add(int p, const LaurentV& c);

  LVVector operator+(const LVVector& o) const;
  LVVector operator-(const LVVector& o) const;
  LVVector operator*(const LaurentV& c) const;
  bool operator==(const LVVector& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LVVector& o) const { return !(*this == o); }

private:
  Coeffs coeffs_;
};

/// The combinatorial encoding of the Lusztig-Vogan module: parameters,
/// per-generator root-type tables, optional closure poset, the diagram
/// involution and optional W_K data. Immutable once validated; apply_Ts
/// and apply_bs are pure.
class OrbitDatum {
public:
  OrbitDatum(CoxeterPtr sys, Involution theta, std::optional<SubgroupSpec> wk,
             std::vector<Param> params,
             std::map<std::pair<int, int>, CaseEntry> table,
             std::optional<std::vector<std::pair<std::string, std::string>>> closure);

  const CoxeterPtr& system() const { return sys_; }
  const Involution& theta() const { return theta_; }
  const std::optional<SubgroupSpec>& wk() const { return wk_; }

  int param_count() const { return static_cast<int>(params_.size()); }
  const Param& param(int p) const { return params_[p]; }
  const std::vector<Param>& params() const { return params_; }
  /// Throws Errc::unknown_param.
  int param_index(const std::string& id) const;
  bool has_param(const std::string& id) const;
  const CaseEntry* entry(int p, int s) const;

  bool has_closure() const { return closure_.has_value(); }
  const std::optional<std::vector<std::pair<std::string, std::string>>>& closure_pairs() const {
    return closure_;
  }
  /// Reflexive closure order on orbit ids (transitive closure of the pairs).
  bool orbit_leq(const std::string& lower, const std::string& upper) const;
  std::vector<std::string> orbits() const;
  std::vector<int> params_on_orbit(const std::string& orbit) const;

  /// Checks every CaseEntry invariant, T_s^2 = (q-1)T_s + q on every basis
  /// parameter, and (rank >= 2) braid relations as operator identities.
  ValidationReport validate();
  bool is_validated() const { return validated_; }

  LVVector basis(int p) const;
  LVVector basis(const std::string& id) const { return basis(param_index(id)); }

  LVVector apply_Ts(const LVVector& x, int s) const;
  LVVector apply_bs(const LVVector& x, int s) const;
  /// T_w through a reduced word of w (right action, so the word applies
  /// left-to-right).
  LVVector apply_Tw(const LVVector& x, const std::vector<int>& word) const;

  /// tau-invariant of a parameter: the s with x*s = x in the
  /// Richardson-Springer monoid, i.e. cases {a, b2, c2, d2, e}.
  std::set<int> tau_invariant(int p) const;

  /// Connected components of the T_s support graph ("T_s-components");
  /// params within a block and blocks themselves are in (dim, id) order.
  std::vector<std::vector<int>> blocks() const;

  /// Deterministic (dim, id) order of param indices.
  std::vector<int> sorted_params() const;

  std::string vector_to_string(const LVVector& x) const;

private:
  LVVector apply_Ts_unchecked(const LVVector& x, int s) const;
  void require_validated() const;
  void build_closure_order();

  CoxeterPtr sys_;
  Involution theta_;
  std::optional<SubgroupSpec> wk_;
  std::vector<Param> params_;
  std::map<std::string, int> index_;
  std::map<std::pair<int, int>, CaseEntry> table_;
  std::optional<std::vector<std::pair<std::string, std::string>>> closure_;
  std::map<std::string, int> orbit_index_;
  std::vector<std::set<int>> below_; // orbit -> strictly lower orbits (reachability)
  bool closure_has_cycle_ = false;
  bool validated_ = false;
};

/// All parameters of W with trivial local systems: params = elements of W,
/// dim = length, every reflection complex (b1/b2), single closed orbit {e}.
OrbitDatum gen_complex(const CoxeterPtr& sys);
OrbitDatum gen_complex(const std::string& cartan_type);

/// Built-in example data: "sl2r", "psl2r", "sl2c".
OrbitDatum builtin_datum(const std::string& name);

} // namespace klv

#endif
