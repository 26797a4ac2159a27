#ifndef KLV_FIBER_CALC_HPP
#define KLV_FIBER_CALC_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "klv/hecke.hpp"
#include "klv/lv_datum.hpp"

namespace klv {

/// Data of an equivariant resolution Z -> G/P_I built from a seed K-orbit,
/// B-orbit closures Bx_iB and parabolic gluing sets J_i, J, I.
struct ResolutionSpec {
  std::optional<std::string> x0;  // seed param id (trivial local system)
  std::optional<LVVector> m_class; // or an explicit m-class
  std::vector<std::vector<int>> xs; // words for x_1..x_l
  std::vector<std::set<int>> js;    // J_1..J_l
  std::set<int> j;
  std::set<int> i;
};

/// Sum of the trivial local systems on all orbits below `orbit` in the
/// closure order. The caller asserts Q-smoothness of the closure.
LVVector m_class_smooth_closure(const OrbitDatum& datum, const std::string& orbit);

/// Checks the tau-invariant constraints J_i ⊆ tau(x_{i-1}) ∩ tau(x_i^{-1}),
/// J ⊆ tau(x_l), I ⊇ J. Throws Errc::spec_violation.
void validate_resolution_spec(const OrbitDatum& datum, const ResolutionSpec& spec);

/// The convolution class m(..) * prod h(Bx_iB) * h(P_I/B) / p with
/// p = p_J * prod p_{J_i}; coefficients divided exactly
/// (Errc::non_divisible when a hypothesis fails).
LVVector convolution_class(const OrbitDatum& datum, const ResolutionSpec& spec);

/// Poincare polynomial (indeterminate q^{1/2}, rendered via v) of the fiber
/// over a point on the orbit of param `y_id`.
LaurentV fiber_poincare(const OrbitDatum& datum, const ResolutionSpec& spec,
                        const std::string& y_id);

/// One (orbit, polynomial) row per orbit of the datum.
std::vector<std::pair<std::string, LaurentV>> fiber_table(const OrbitDatum& datum,
                                                          const ResolutionSpec& spec);

} // namespace klv

#endif
