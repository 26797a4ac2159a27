#ifndef KLV_KLV_ENGINE_HPP
#define KLV_KLV_ENGINE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klv/lv_datum.hpp"

namespace klv {

/// An LVVector read in the rescaled basis hat(gamma) = v^{d(gamma)} gamma.
/// Same container as LVVector; to_hat/from_hat are the basis-change views.
using HatVector = LVVector;

/// A computed canonical-basis element in the hat basis: leading coefficient 1
/// on `param`, all other coefficients in vZ[v] with exponent parity
/// d(param) - d(gamma') mod 2.
struct ICClass {
  int param = -1;
  HatVector hat;
};

/// Parameters whose canonical classes were produced simultaneously and could
/// not be split; their sum is known exactly.
struct UnresolvedGroup {
  std::vector<int> params;
  HatVector sum_hat;
};

struct KLVTable {
  std::map<int, ICClass> resolved;
  std::vector<UnresolvedGroup> unresolved;
};

struct PeelResult {
  std::map<int, LaurentV> multiplicities;
  HatVector residual;
};

/// Polynomial in q with integer coefficients (KLV polynomials).
struct QPoly {
  std::map<int, mpz_class> coeffs;
  bool is_one() const;
  std::string to_string() const;
};

HatVector to_hat(const OrbitDatum& datum, const LVVector& x);
LVVector from_hat(const OrbitDatum& datum, const HatVector& h);
HatVector hat_bs(const OrbitDatum& datum, const HatVector& h, int s);

bool ic_invariants_ok(const OrbitDatum& datum, const ICClass& c);

/// Extracts canonical-basis multiplicities from the hat-class of a semisimple
/// complex, top-down in dimension. Throws Errc::not_semisimple when a
/// multiplicity comes out asymmetric or negative.
PeelResult peel(const OrbitDatum& datum, const HatVector& x, const KLVTable& known);

/// Seeds trivial local systems on closed orbits, declared-clean parameters
/// and `extra_seeds` (each as its own hat basis vector), then drives
/// hat_bs + peel to a fixpoint. `round_cap` defaults to |params| * |S|;
/// exceeding it raises a diagnostic.
KLVTable compute_klv(const OrbitDatum& datum, const std::vector<int>& extra_seeds = {},
                     std::optional<int> round_cap = std::nullopt);

/// Same driver, but starting from an existing table (e.g. a previous run's
/// output, for which the result is unchanged).
KLVTable compute_klv_from(const OrbitDatum& datum, KLVTable initial,
                          std::optional<int> round_cap = std::nullopt);

/// P_{gamma',gamma} defined by hat-coefficient = v^{d(gamma)-d(gamma')} P(q)|_{q=v^{-2}}.
/// Throws Errc::parity_violation when the parity/degree pattern does not match.
QPoly klv_polynomial(const OrbitDatum& datum, const ICClass& c, int target);
std::map<std::pair<int, int>, QPoly> klv_polynomials(const OrbitDatum& datum,
                                                     const KLVTable& table);

} // namespace klv

#endif
