#include "klv/klv_engine.hpp"

#include <algorithm>
#include <sstream>

#include "klv/error.hpp"

namespace klv {

bool QPoly::is_one() const {
  return coeffs.size() == 1 && coeffs.count(0) && coeffs.at(0) == 1;
}

std::string QPoly::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
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
      out << "q";
      if (k != 1) out << "^" << k;
    }
  }
  return out.str();
}

HatVector to_hat(const OrbitDatum& datum, const LVVector& x) {
  HatVector out;
  for (const auto& [p, c] : x.coeffs()) out.add(p, c * LaurentV::v(-datum.param(p).dim));
  return out;
}

LVVector from_hat(const OrbitDatum& datum, const HatVector& h) {
  LVVector out;
  for (const auto& [p, c] : h.coeffs()) out.add(p, c * LaurentV::v(datum.param(p).dim));
  return out;
}

HatVector hat_bs(const OrbitDatum& datum, const HatVector& h, int s) {
  return to_hat(datum, datum.apply_bs(from_hat(datum, h), s));
}

bool ic_invariants_ok(const OrbitDatum& datum, const ICClass& c) {
  if (c.param < 0 || c.param >= datum.param_count()) return false;
  if (!c.hat.coeff(c.param).is_one()) return false;
  int d = datum.param(c.param).dim;
  for (const auto& [p, coeff] : c.hat.coeffs()) {
    if (p == c.param) continue;
    if (coeff.min_exp() < 1) return false; // tails live in vZ[v]
    if (!coeff.has_exponent_parity(d - datum.param(p).dim)) return false;
  }
  return true;
}

PeelResult peel(const OrbitDatum& datum, const HatVector& x, const KLVTable& known) {
  PeelResult result;
  HatVector work = x;
  // decreasing dim, ties in id order
  std::vector<int> order = datum.sorted_params();
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return datum.param(a).dim > datum.param(b).dim; });

  for (int p : order) {
    if (!known.resolved.count(p)) continue;
    LaurentV f = work.coeff(p);
    if (f.is_zero()) continue;
    int d = datum.param(p).dim;
    bool unknown_above = false;
    for (const auto& [t, c] : work.coeffs()) {
      (void)c;
      if (datum.param(t).dim > d && !known.resolved.count(t)) {
        unknown_above = true;
        break;
      }
    }
    LaurentV m;
    if (unknown_above) {
      // Unknown classes can only contaminate within vZ[v]; the bar-symmetric
      // multiplicity is recovered from the nonpositive part.
      LaurentV nonpos = f.nonpositive_part();
      LaurentV strictly_neg = nonpos - LaurentV(f.coeff(0));
      m = nonpos + strictly_neg.bar();
    } else {
      m = f;
    }
    if (m.is_zero()) continue;
    if (!m.is_bar_symmetric())
      throw Error(Errc::not_semisimple,
                  "asymmetric multiplicity " + m.to_string() + " at " + datum.param(p).id);
    if (!m.all_coeffs_nonnegative())
      throw Error(Errc::not_semisimple,
                  "negative multiplicity " + m.to_string() + " at " + datum.param(p).id);
    result.multiplicities[p] = m;
    work = work - known.resolved.at(p).hat * m;
  }
  result.residual = work;
  return result;
}

namespace {

std::vector<int> unresolved_support(const OrbitDatum& datum, const HatVector& x,
                                    const KLVTable& table) {
  std::vector<int> out;
  for (const auto& [p, c] : x.coeffs()) {
    (void)c;
    if (!table.resolved.count(p)) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [&](int a, int b) {
    if (datum.param(a).dim != datum.param(b).dim) return datum.param(a).dim < datum.param(b).dim;
    return datum.param(a).id < datum.param(b).id;
  });
  return out;
}

// Tries to read a single new canonical class off a peel residual. Returns
// true when the table changed.
bool absorb_residual(const OrbitDatum& datum, const HatVector& residual, KLVTable& table) {
  if (residual.is_zero()) return false;
  std::vector<int> unresolved = unresolved_support(datum, residual, table);
  if (unresolved.empty())
    throw Error(Errc::not_semisimple, "nonzero residual supported on resolved parameters only");
  int dmax = datum.param(unresolved.back()).dim;
  std::vector<int> maximal;
  for (int p : unresolved)
    if (datum.param(p).dim == dmax) maximal.push_back(p);

  if (maximal.size() == 1) {
    int p_new = maximal[0];
    LaurentV m = residual.coeff(p_new);
    ICClass candidate;
    candidate.param = p_new;
    if (m.is_one()) {
      candidate.hat = residual;
      if (ic_invariants_ok(datum, candidate)) {
        table.resolved[p_new] = candidate;
        return true;
      }
    } else if (m.is_bar_symmetric()) {
      HatVector divided;
      bool exact = true;
      for (const auto& [p, c] : residual.coeffs()) {
        auto quo = LaurentV::div_exact(c, m);
        if (!quo) {
          exact = false;
          break;
        }
        divided.add(p, *quo);
      }
      if (exact) {
        candidate.hat = divided;
        if (ic_invariants_ok(datum, candidate)) {
          table.resolved[p_new] = candidate;
          return true;
        }
      }
    }
  }

  // Not splittable now: remember the group with its known sum.
  for (const auto& g : table.unresolved)
    if (g.params == unresolved) return false;
  table.unresolved.push_back({unresolved, residual});
  return true;
}

} // namespace

KLVTable compute_klv(const OrbitDatum& datum, const std::vector<int>& extra_seeds,
                     std::optional<int> round_cap) {
  KLVTable table;
  std::vector<int> seeds;
  for (int p : datum.sorted_params()) {
    const Param& prm = datum.param(p);
    if ((prm.closed_orbit && prm.trivial_ls) || prm.declared_clean) seeds.push_back(p);
  }
  for (int p : extra_seeds)
    if (std::find(seeds.begin(), seeds.end(), p) == seeds.end()) seeds.push_back(p);
  for (int p : seeds) {
    ICClass c;
    c.param = p;
    c.hat = datum.basis(p); // hat basis vector of a seed is its own class
    table.resolved[p] = c;
  }
  return compute_klv_from(datum, std::move(table), round_cap);
}

KLVTable compute_klv_from(const OrbitDatum& datum, KLVTable initial,
                          std::optional<int> round_cap) {
  if (!datum.is_validated())
    throw Error(Errc::unvalidated_datum, "compute_klv needs a validated datum");
  KLVTable table = std::move(initial);

  int cap = round_cap.value_or(datum.param_count() * datum.system()->rank() + 1);
  int rounds = 0;
  bool changed = true;
  std::set<std::pair<int, int>> processed;
  while (changed) {
    if (++rounds > cap)
      throw Error(Errc::bad_input,
                  "compute_klv exceeded its round cap (" + std::to_string(cap) +
                      ") without reaching a fixpoint; raise the cap to continue");
    changed = false;

    std::vector<int> resolved_now;
    for (int p : datum.sorted_params())
      if (table.resolved.count(p)) resolved_now.push_back(p);

    // each (class, s) pair is peeled once; later resolutions can only shrink
    // its residual, and residuals parked in groups are re-peeled below
    for (int p : resolved_now) {
      for (int s = 0; s < datum.system()->rank(); ++s) {
        if (!processed.insert({p, s}).second) continue;
        HatVector image = hat_bs(datum, table.resolved.at(p).hat, s);
        PeelResult peeled = peel(datum, image, table);
        if (absorb_residual(datum, peeled.residual, table)) changed = true;
      }
    }

    // Re-examine recorded groups: members may have become resolvable.
    std::vector<UnresolvedGroup> groups = std::move(table.unresolved);
    table.unresolved.clear();
    for (const auto& group : groups) {
      PeelResult peeled = peel(datum, group.sum_hat, table);
      if (peeled.residual.is_zero()) {
        changed = true;
        continue; // fully absorbed by resolved classes
      }
      std::vector<int> remaining = unresolved_support(datum, peeled.residual, table);
      if (remaining == group.params && peeled.residual == group.sum_hat) {
        table.unresolved.push_back(group); // nothing new
        continue;
      }
      changed = true;
      absorb_residual(datum, peeled.residual, table);
    }
  }

  return table;
}

QPoly klv_polynomial(const OrbitDatum& datum, const ICClass& c, int target) {
  LaurentV h = c.hat.coeff(target);
  if (h.is_zero())
    throw Error(Errc::unknown_param, "target param not in the support of this class");
  int dd = datum.param(c.param).dim - datum.param(target).dim;
  QPoly out;
  for (const auto& [k, coeff] : h.coeffs()) {
    int num = dd - k;
    if (num < 0 || num % 2 != 0)
      throw Error(Errc::parity_violation,
                  "coefficient " + h.to_string() + " at " + datum.param(target).id +
                      " does not match the v^{d-d'} Z[v^2] pattern");
    out.coeffs[num / 2] = coeff;
  }
  return out;
}

std::map<std::pair<int, int>, QPoly> klv_polynomials(const OrbitDatum& datum,
                                                     const KLVTable& table) {
  std::map<std::pair<int, int>, QPoly> out;
  for (const auto& [p, c] : table.resolved)
    for (const auto& [t, coeff] : c.hat.coeffs()) {
      (void)coeff;
      out[{t, p}] = klv_polynomial(datum, c, t);
    }
  return out;
}

} // namespace klv
