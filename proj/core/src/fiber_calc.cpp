#include "klv/fiber_calc.hpp"

#include <algorithm>

#include "klv/error.hpp"

namespace klv {

LVVector m_class_smooth_closure(const OrbitDatum& datum, const std::string& orbit) {
  if (!datum.has_closure())
    throw Error(Errc::no_closure_poset, "m_class_smooth_closure needs a closure poset");
  LVVector out;
  for (int p = 0; p < datum.param_count(); ++p) {
    const Param& prm = datum.param(p);
    if (!prm.trivial_ls) continue;
    if (datum.orbit_leq(prm.orbit, orbit)) out.add(p, LaurentV::one());
  }
  return out;
}

namespace {

std::set<int> orbit_tau_of_param(const OrbitDatum& datum, const std::string& id) {
  return datum.tau_invariant(datum.param_index(id));
}

bool subset(const std::set<int>& a, const std::set<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string set_str(const std::set<int>& s) {
  std::string out = "{";
  for (int x : s) out += std::to_string(x) + ",";
  if (out.back() == ',') out.pop_back();
  return out + "}";
}

} // namespace

void validate_resolution_spec(const OrbitDatum& datum, const ResolutionSpec& spec) {
  if (spec.x0.has_value() == spec.m_class.has_value())
    throw Error(Errc::spec_violation, "exactly one of x0 / m_class must be given");
  if (spec.xs.size() != spec.js.size())
    throw Error(Errc::spec_violation, "xs and js must have the same length");
  auto sys = datum.system();

  std::vector<GroupElt> xs;
  for (const auto& word : spec.xs) xs.push_back(sys->from_word(word));

  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::set<int> tau_prev;
    if (i == 0) {
      if (spec.x0) tau_prev = orbit_tau_of_param(datum, *spec.x0);
    } else {
      tau_prev = right_descents(xs[i - 1]);
    }
    std::set<int> tau_inv = left_descents(xs[i]); // tau(x_i^{-1})
    if (i == 0 && !spec.x0) {
      // explicit m-class: no orbit tau-invariant to check against
      if (!subset(spec.js[i], tau_inv))
        throw Error(Errc::spec_violation,
                    "J_1 = " + set_str(spec.js[i]) + " is not contained in tau(x_1^{-1})");
      continue;
    }
    if (!subset(spec.js[i], tau_prev) || !subset(spec.js[i], tau_inv))
      throw Error(Errc::spec_violation,
                  "J_" + std::to_string(i + 1) + " = " + set_str(spec.js[i]) +
                      " violates J_i ⊆ tau(x_{i-1}) ∩ tau(x_i^{-1})");
  }

  std::set<int> tau_last;
  if (!xs.empty())
    tau_last = right_descents(xs.back());
  else if (spec.x0)
    tau_last = orbit_tau_of_param(datum, *spec.x0);
  if (!subset(spec.j, tau_last))
    throw Error(Errc::spec_violation, "J = " + set_str(spec.j) + " is not contained in tau(x_l)");
  if (!subset(spec.j, spec.i))
    throw Error(Errc::spec_violation, "I must contain J");
}

LVVector convolution_class(const OrbitDatum& datum, const ResolutionSpec& spec) {
  validate_resolution_spec(datum, spec);
  auto sys = datum.system();

  LVVector cls;
  if (spec.x0) {
    int p0 = datum.param_index(*spec.x0);
    cls = m_class_smooth_closure(datum, datum.param(p0).orbit);
  } else {
    cls = *spec.m_class;
  }

  // act with h(Bx_iB) = sum_{y <= x_i} T_y for each factor
  for (const auto& word : spec.xs) {
    GroupElt xi = sys->from_word(word);
    LVVector next;
    for (const auto& y : lower_interval(xi)) next = next + datum.apply_Tw(cls, y.reduced_word());
    cls = next;
  }
  // the final parabolic factor h(P_I/B) = sum_{y in W_I} T_y
  {
    SubgroupSpec gens;
    for (int s : spec.i) gens.generator_words.push_back({s});
    LVVector next;
    for (const auto& y : subgroup_closure(sys, gens))
      next = next + datum.apply_Tw(cls, y.reduced_word());
    cls = next;
  }

  // divide by p = p_J * prod p_{J_i}
  LaurentV p = parabolic_poincare(sys, spec.j);
  for (const auto& ji : spec.js) p *= parabolic_poincare(sys, ji);
  LVVector out;
  for (const auto& [prm, c] : cls.coeffs()) {
    auto quo = LaurentV::div_exact(c, p);
    if (!quo)
      throw Error(Errc::non_divisible, "coefficient " + c.to_string() + " at " +
                                           datum.param(prm).id + " is not divisible by p = " +
                                           p.to_string());
    out.add(prm, *quo);
  }
  return out;
}

LaurentV fiber_poincare(const OrbitDatum& datum, const ResolutionSpec& spec,
                        const std::string& y_id) {
  LVVector cls = convolution_class(datum, spec);
  const std::string& orbit = datum.param(datum.param_index(y_id)).orbit;
  LaurentV sum;
  for (int p : datum.params_on_orbit(orbit)) sum += cls.coeff(p);
  return sum;
}

std::vector<std::pair<std::string, LaurentV>> fiber_table(const OrbitDatum& datum,
                                                          const ResolutionSpec& spec) {
  LVVector cls = convolution_class(datum, spec);
  std::vector<std::pair<std::string, LaurentV>> out;
  for (const auto& orbit : datum.orbits()) {
    LaurentV sum;
    for (int p : datum.params_on_orbit(orbit)) sum += cls.coeff(p);
    out.emplace_back(orbit, sum);
  }
  return out;
}

} // namespace klv
