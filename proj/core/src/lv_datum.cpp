#include "klv/lv_datum.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "klv/error.hpp"

namespace klv {

const char* root_case_name(RootCase c) {
  switch (c) {
    case RootCase::a: return "a";
    case RootCase::b1: return "b1";
    case RootCase::b2: return "b2";
    case RootCase::c1: return "c1";
    case RootCase::c2: return "c2";
    case RootCase::d1: return "d1";
    case RootCase::d2: return "d2";
    case RootCase::e: return "e";
  }
  return "?";
}

RootCase parse_root_case(const std::string& name) {
  if (name == "a") return RootCase::a;
  if (name == "b1") return RootCase::b1;
  if (name == "b2") return RootCase::b2;
  if (name == "c1") return RootCase::c1;
  if (name == "c2") return RootCase::c2;
  if (name == "d1") return RootCase::d1;
  if (name == "d2") return RootCase::d2;
  if (name == "e") return RootCase::e;
  throw Error(Errc::bad_input, "unknown root-type case: " + name);
}

int root_case_arity(RootCase c) {
  switch (c) {
    case RootCase::a:
    case RootCase::e: return 0;
    case RootCase::b1:
    case RootCase::b2: return 1;
    default: return 2;
  }
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  if (ok()) {
    out << "valid";
    if (quadratic_checked) out << "; quadratic OK";
    out << (braid_checked ? "; braid OK" : "; braid N/A (rank 1)");
    return out.str();
  }
  out << violations.size() << " violation(s)";
  for (const auto& v : violations) {
    out << "\n  [" << v.code << "] param=" << v.param;
    if (v.s >= 0) out << " s=" << v.s;
    out << ": " << v.message;
  }
  return out.str();
}

// ------------------------------------------------------------------ LVVector

LaurentV LVVector::coeff(int p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? LaurentV::zero() : it->second;
}

void LVVector::add(int p, const LaurentV& c) {
  if (c.is_zero()) return;
  auto it = coeffs_.find(p);
  if (it == coeffs_.end()) {
    coeffs_.emplace(p, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

LVVector LVVector::operator+(const LVVector& o) const {
  LVVector r = *this;
  for (const auto& [p, c] : o.coeffs_) r.add(p, c);
  return r;
}

LVVector LVVector::operator-(const LVVector& o) const {
  LVVector r = *this;
  for (const auto& [p, c] : o.coeffs_) r.add(p, -c);
  return r;
}

LVVector LVVector::operator*(const LaurentV& c) const {
  LVVector r;
  if (c.is_zero()) return r;
  for (const auto& [p, cp] : coeffs_) r.add(p, cp * c);
  return r;
}

// ---------------------------------------------------------------- OrbitDatum

OrbitDatum::OrbitDatum(CoxeterPtr sys, Involution theta, std::optional<SubgroupSpec> wk,
                       std::vector<Param> params,
                       std::map<std::pair<int, int>, CaseEntry> table,
                       std::optional<std::vector<std::pair<std::string, std::string>>> closure)
    : sys_(std::move(sys)),
      theta_(std::move(theta)),
      wk_(std::move(wk)),
      params_(std::move(params)),
      table_(std::move(table)),
      closure_(std::move(closure)) {
  for (int p = 0; p < param_count(); ++p) {
    if (index_.count(params_[p].id))
      throw Error(Errc::bad_input, "duplicate param id: " + params_[p].id);
    index_[params_[p].id] = p;
  }
  build_closure_order();
}

void OrbitDatum::build_closure_order() {
  orbit_index_.clear();
  below_.clear();
  closure_has_cycle_ = false;
  if (!closure_) return;
  auto intern = [&](const std::string& id) {
    auto [it, inserted] = orbit_index_.emplace(id, static_cast<int>(orbit_index_.size()));
    (void)inserted;
    return it->second;
  };
  for (const auto& p : params_) intern(p.orbit);
  std::vector<std::vector<int>> direct;
  for (const auto& [lo, hi] : *closure_) {
    int l = intern(lo), h = intern(hi);
    if (static_cast<int>(direct.size()) < static_cast<int>(orbit_index_.size()))
      direct.resize(orbit_index_.size());
    direct[h].push_back(l);
  }
  direct.resize(orbit_index_.size());
  below_.assign(orbit_index_.size(), {});

  // memoized DFS reachability; a back edge marks a cycle
  std::vector<int> state(orbit_index_.size(), 0); // 0 new, 1 on stack, 2 done
  std::function<void(int)> dfs = [&](int u) {
    state[u] = 1;
    for (int v : direct[u]) {
      if (state[v] == 1) {
        closure_has_cycle_ = true;
        continue;
      }
      if (state[v] == 0) dfs(v);
      below_[u].insert(v);
      below_[u].insert(below_[v].begin(), below_[v].end());
    }
    state[u] = 2;
  };
  for (std::size_t u = 0; u < direct.size(); ++u)
    if (state[u] == 0) dfs(static_cast<int>(u));
}

int OrbitDatum::param_index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error(Errc::unknown_param, "unknown param: " + id);
  return it->second;
}

bool OrbitDatum::has_param(const std::string& id) const { return index_.count(id) > 0; }

const CaseEntry* OrbitDatum::entry(int p, int s) const {
  auto it = table_.find({p, s});
  return it == table_.end() ? nullptr : &it->second;
}

bool OrbitDatum::orbit_leq(const std::string& lower, const std::string& upper) const {
  if (!closure_) throw Error(Errc::no_closure_poset, "datum has no closure poset");
  if (lower == upper) return true;
  auto lo = orbit_index_.find(lower);
  auto hi = orbit_index_.find(upper);
  if (lo == orbit_index_.end() || hi == orbit_index_.end()) return false;
  return below_[hi->second].count(lo->second) > 0;
}

std::vector<std::string> OrbitDatum::orbits() const {
  std::set<std::string> seen;
  std::vector<std::string> out;
  for (const auto& p : params_)
    if (seen.insert(p.orbit).second) out.push_back(p.orbit);
  return out;
}

std::vector<int> OrbitDatum::params_on_orbit(const std::string& orbit) const {
  std::vector<int> out;
  for (int p = 0; p < param_count(); ++p)
    if (params_[p].orbit == orbit) out.push_back(p);
  return out;
}

std::vector<int> OrbitDatum::sorted_params() const {
  std::vector<int> idx(params_.size());
  for (std::size_t i = 0; i < params_.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (params_[a].dim != params_[b].dim) return params_[a].dim < params_[b].dim;
    return params_[a].id < params_[b].id;
  });
  return idx;
}

LVVector OrbitDatum::basis(int p) const {
  if (p < 0 || p >= param_count()) throw Error(Errc::unknown_param, "param index out of range");
  LVVector x;
  x.add(p, LaurentV::one());
  return x;
}

void OrbitDatum::require_validated() const {
  if (!validated_)
    throw Error(Errc::unvalidated_datum, "datum must pass validate() before module operations");
}

LVVector OrbitDatum::apply_Ts_unchecked(const LVVector& x, int s) const {
  LaurentV q = LaurentV::q(1);
  LaurentV qm1 = q - LaurentV::one();
  LaurentV qm2 = qm1 - LaurentV::one();
  LVVector out;
  for (const auto& [p, c] : x.coeffs()) {
    const CaseEntry* e = entry(p, s);
    if (!e) throw Error(Errc::bad_input, "missing table entry for (" + params_[p].id + ", s)");
    switch (e->kind) {
      case RootCase::a:
        out.add(p, c * q);
        break;
      case RootCase::b1:
        out.add(e->targets[0], c);
        break;
      case RootCase::b2:
        out.add(p, c * qm1);
        out.add(e->targets[0], c * q);
        break;
      case RootCase::c1:
        out.add(p, c);
        out.add(e->targets[0], c);
        out.add(e->targets[1], c);
        break;
      case RootCase::c2:
        out.add(p, c * qm1);
        out.add(e->targets[0], -c);       // the other local system on the same orbit
        out.add(e->targets[1], c * qm1);  // the lower parameter
        break;
      case RootCase::d1:
        out.add(e->targets[0], c);
        out.add(e->targets[1], c);
        break;
      case RootCase::d2:
        out.add(p, c * qm2);
        out.add(e->targets[0], c * qm1);
        out.add(e->targets[1], c * qm1);
        break;
      case RootCase::e:
        out.add(p, -c);
        break;
    }
  }
  return out;
}

LVVector OrbitDatum::apply_Ts(const LVVector& x, int s) const {
  require_validated();
  if (s < 0 || s >= sys_->rank()) throw Error(Errc::bad_input, "generator index out of range");
  for (const auto& [p, c] : x.coeffs()) {
    (void)c;
    if (p < 0 || p >= param_count())
      throw Error(Errc::unknown_param, "vector references an unknown param index");
  }
  return apply_Ts_unchecked(x, s);
}

LVVector OrbitDatum::apply_bs(const LVVector& x, int s) const {
  LVVector t = apply_Ts(x, s);
  return (t + x) * LaurentV::v(1);
}

LVVector OrbitDatum::apply_Tw(const LVVector& x, const std::vector<int>& word) const {
  LVVector out = x;
  for (int s : word) out = apply_Ts(out, s);
  return out;
}

std::set<int> OrbitDatum::tau_invariant(int p) const {
  std::set<int> out;
  for (int s = 0; s < sys_->rank(); ++s) {
    const CaseEntry* e = entry(p, s);
    if (!e) continue;
    switch (e->kind) {
      case RootCase::a:
      case RootCase::b2:
      case RootCase::c2:
      case RootCase::d2:
      case RootCase::e:
        out.insert(s);
        break;
      default:
        break;
    }
  }
  return out;
}

ValidationReport OrbitDatum::validate() {
  ValidationReport report;
  auto fail = [&](const std::string& code, int p, int s, const std::string& msg) {
    report.violations.push_back({code, p >= 0 ? params_[p].id : std::string("-"), s, msg});
  };

  // ---- structural checks on params
  std::map<std::string, std::vector<int>> by_orbit;
  for (int p = 0; p < param_count(); ++p) by_orbit[params_[p].orbit].push_back(p);
  for (const auto& [orbit, ps] : by_orbit) {
    int trivial_count = 0;
    std::set<std::string> systems;
    for (int p : ps) {
      if (params_[p].trivial_ls) ++trivial_count;
      if (!systems.insert(params_[p].local_system).second)
        fail("LocalSystemRuleViolation", p, -1,
             "duplicate local system '" + params_[p].local_system + "' on orbit " + orbit);
      if (params_[p].dim != params_[ps[0]].dim)
        fail("DimensionRuleViolation", p, -1, "params on orbit " + orbit + " disagree on dim");
      if (params_[p].closed_orbit != params_[ps[0]].closed_orbit)
        fail("OrbitRuleViolation", p, -1, "params on orbit " + orbit + " disagree on closedness");
    }
    if (trivial_count != 1)
      fail("LocalSystemRuleViolation", ps[0], -1,
           "orbit " + orbit + " has " + std::to_string(trivial_count) +
               " trivial local systems (expected exactly 1)");
  }

  // ---- closure poset checks
  if (closure_) {
    std::set<std::string> orbit_set;
    for (const auto& p : params_) orbit_set.insert(p.orbit);
    for (const auto& [lo, hi] : *closure_) {
      if (!orbit_set.count(lo) || !orbit_set.count(hi)) {
        fail("ClosureRuleViolation", -1, -1, "closure pair references unknown orbit");
        continue;
      }
    }
    if (closure_has_cycle_) fail("ClosureRuleViolation", -1, -1, "closure order has a cycle");
    for (const auto& [orbit, ps] : by_orbit) {
      if (!params_[ps[0]].closed_orbit) continue;
      auto it = orbit_index_.find(orbit);
      if (it != orbit_index_.end() && !below_[it->second].empty())
        fail("OrbitRuleViolation", ps[0], -1,
             "closed orbit " + orbit + " is not minimal in the closure order");
    }
  }

  // ---- case-table checks
  int rank = sys_->rank();
  for (int p = 0; p < param_count(); ++p) {
    int dim = params_[p].dim;
    for (int s = 0; s < rank; ++s) {
      const CaseEntry* e = entry(p, s);
      if (!e) {
        fail("MissingCase", p, s, "no table entry");
        continue;
      }
      if (static_cast<int>(e->targets.size()) != root_case_arity(e->kind)) {
        fail("CaseArity", p, s, "wrong number of targets for case " +
                                    std::string(root_case_name(e->kind)));
        continue;
      }
      bool targets_ok = true;
      for (int t : e->targets)
        if (t < 0 || t >= param_count()) {
          fail("UnknownParam", p, s, "target index out of range");
          targets_ok = false;
        }
      if (!targets_ok) continue;
      auto kind_of = [&](int t) -> const CaseEntry* { return entry(t, s); };
      switch (e->kind) {
        case RootCase::a:
        case RootCase::e:
          break;
        case RootCase::b1: {
          int t = e->targets[0];
          if (params_[t].dim != dim + 1)
            fail("DimensionRuleViolation", p, s, "b1 target must have dim+1");
          const CaseEntry* r = kind_of(t);
          if (!r || r->kind != RootCase::b2 || r->targets != std::vector<int>{p})
            fail("ReciprocityViolation", p, s, "b1 target lacks reciprocal b2");
          break;
        }
        case RootCase::b2: {
          int t = e->targets[0];
          if (params_[t].dim != dim - 1)
            fail("DimensionRuleViolation", p, s, "b2 target must have dim-1");
          const CaseEntry* r = kind_of(t);
          if (!r || r->kind != RootCase::b1 || r->targets != std::vector<int>{p})
            fail("ReciprocityViolation", p, s, "b2 target lacks reciprocal b1");
          break;
        }
        case RootCase::c1: {
          int t1 = e->targets[0], t2 = e->targets[1];
          if (t1 == t2) fail("CaseArity", p, s, "c1 targets must be distinct");
          if (params_[t1].orbit != params_[t2].orbit)
            fail("OrbitRuleViolation", p, s, "c1 targets must share one orbit");
          if (params_[t1].orbit == params_[p].orbit)
            fail("OrbitRuleViolation", p, s, "c1 targets must live on a different orbit");
          for (int t : e->targets) {
            if (params_[t].dim != dim + 1)
              fail("DimensionRuleViolation", p, s, "c1 target must have dim+1");
            const CaseEntry* r = kind_of(t);
            int other = (t == t1) ? t2 : t1;
            if (!r || r->kind != RootCase::c2 || r->targets != std::vector<int>{other, p})
              fail("ReciprocityViolation", p, s, "c1 target lacks reciprocal c2 [other, lower]");
          }
          break;
        }
        case RootCase::c2: {
          int other = e->targets[0], low = e->targets[1];
          if (params_[other].orbit != params_[p].orbit || other == p)
            fail("OrbitRuleViolation", p, s,
                 "c2 first target must be the other local system on the same orbit");
          if (params_[low].dim != dim - 1)
            fail("DimensionRuleViolation", p, s, "c2 second target must have dim-1");
          const CaseEntry* r = kind_of(low);
          bool lists_both = r && r->kind == RootCase::c1 &&
                            ((r->targets == std::vector<int>{p, other}) ||
                             (r->targets == std::vector<int>{other, p}));
          if (!lists_both)
            fail("ReciprocityViolation", p, s, "c2 lower parameter lacks c1 listing both systems");
          break;
        }
        case RootCase::d1: {
          int up = e->targets[0], eq = e->targets[1];
          if (params_[up].dim != dim + 1)
            fail("DimensionRuleViolation", p, s, "d1 first target must have dim+1");
          if (params_[eq].dim != dim)
            fail("DimensionRuleViolation", p, s, "d1 second target must have equal dim");
          if (params_[eq].orbit == params_[p].orbit)
            fail("OrbitRuleViolation", p, s, "d1 equal-dim target must be a different orbit");
          const CaseEntry* r_up = kind_of(up);
          if (!r_up || r_up->kind != RootCase::d2 ||
              !((r_up->targets == std::vector<int>{p, eq}) ||
                (r_up->targets == std::vector<int>{eq, p})))
            fail("ReciprocityViolation", p, s, "d1 upper target lacks d2 listing both lower params");
          const CaseEntry* r_eq = kind_of(eq);
          if (!r_eq || r_eq->kind != RootCase::d1 || r_eq->targets != std::vector<int>{up, p})
            fail("ReciprocityViolation", p, s, "d1 equal-dim target lacks d1 with the same upper");
          break;
        }
        case RootCase::d2: {
          int t1 = e->targets[0], t2 = e->targets[1];
          if (t1 == t2) fail("CaseArity", p, s, "d2 targets must be distinct");
          if (params_[t1].orbit == params_[t2].orbit)
            fail("OrbitRuleViolation", p, s, "d2 targets must be two different orbits");
          for (int t : e->targets) {
            if (params_[t].dim != dim - 1)
              fail("DimensionRuleViolation", p, s, "d2 target must have dim-1");
            const CaseEntry* r = kind_of(t);
            if (!r || r->kind != RootCase::d1 || r->targets.empty() || r->targets[0] != p)
              fail("ReciprocityViolation", p, s, "d2 target lacks d1 pointing back up");
          }
          break;
        }
      }
    }
  }

  // ---- Hecke relations (only meaningful once the table is structurally usable)
  bool structurally_ok = report.violations.empty();
  if (structurally_ok && closure_) {
    // closed orbits must realize the minimum dimension of their block
    std::vector<int> parent(params_.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int a) {
      while (parent[a] != a) {
        parent[a] = parent[parent[a]];
        a = parent[a];
      }
      return a;
    };
    for (const auto& [key, e] : table_)
      for (int t : e.targets) parent[find(key.first)] = find(t);
    std::map<int, int> min_dim;
    for (int p = 0; p < param_count(); ++p) {
      int r = find(p);
      auto it = min_dim.find(r);
      if (it == min_dim.end() || params_[p].dim < it->second) min_dim[r] = params_[p].dim;
    }
    for (int p = 0; p < param_count(); ++p)
      if (params_[p].closed_orbit && params_[p].dim != min_dim[find(p)])
        fail("OrbitRuleViolation", p, -1,
             "closed orbit does not realize the minimum dimension of its block");
    structurally_ok = report.violations.empty();
  }
  if (structurally_ok) {
    LaurentV q = LaurentV::q(1);
    LaurentV qm1 = q - LaurentV::one();
    for (int p = 0; p < param_count(); ++p) {
      LVVector gamma = basis(p);
      for (int s = 0; s < rank; ++s) {
        LVVector ts = apply_Ts_unchecked(gamma, s);
        LVVector lhs = apply_Ts_unchecked(ts, s);
        LVVector rhs = ts * qm1 + gamma * q;
        if (lhs != rhs)
          fail("QuadraticViolation", p, s, "T_s^2 != (q-1)T_s + q on this parameter");
      }
    }
    report.quadratic_checked = true;

    if (rank >= 2) {
      for (int s = 0; s < rank; ++s)
        for (int t = s + 1; t < rank; ++t) {
          int m = sys_->coxeter_m(s, t);
          if (m == 0) continue; // infinite bond: no relation to check
          for (int p = 0; p < param_count(); ++p) {
            LVVector left = basis(p), right = basis(p);
            for (int i = 0; i < m; ++i) {
              left = apply_Ts_unchecked(left, i % 2 == 0 ? s : t);
              right = apply_Ts_unchecked(right, i % 2 == 0 ? t : s);
            }
            if (left != right)
              fail("BraidViolation", p, -1,
                   "braid relation fails for pair (" + std::to_string(s) + "," +
                       std::to_string(t) + ")");
          }
        }
      report.braid_checked = report.violations.empty();
    }
  }

  validated_ = report.ok();
  return report;
}

std::vector<std::vector<int>> OrbitDatum::blocks() const {
  require_validated();
  std::vector<int> parent(params_.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  for (int p = 0; p < param_count(); ++p)
    for (int s = 0; s < sys_->rank(); ++s) {
      LVVector image = apply_Ts_unchecked(basis(p), s);
      for (const auto& [t, c] : image.coeffs()) {
        (void)c;
        unite(p, t);
      }
    }

  std::map<int, std::vector<int>> groups;
  for (int p : sorted_params()) groups[find(p)].push_back(p);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(members);
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    const Param& pa = params_[a[0]];
    const Param& pb = params_[b[0]];
    if (pa.dim != pb.dim) return pa.dim < pb.dim;
    return pa.id < pb.id;
  });
  return out;
}

std::string OrbitDatum::vector_to_string(const LVVector& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int p : sorted_params()) {
    LaurentV c = x.coeff(p);
    if (c.is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")*" << params_[p].id;
  }
  return out.str();
}

// ------------------------------------------------------------- constructors

OrbitDatum gen_complex(const CoxeterPtr& sys) {
  std::vector<GroupElt> elts = enumerate(sys);
  std::vector<Param> params;
  std::map<std::string, int> index;
  for (const auto& w : elts) {
    Param p;
    p.id = word_string(w);
    p.orbit = p.id;
    p.dim = w.length();
    p.local_system = "triv";
    p.trivial_ls = true;
    p.closed_orbit = w.is_identity();
    p.declared_clean = false;
    index[p.id] = static_cast<int>(params.size());
    params.push_back(p);
  }
  std::map<std::pair<int, int>, CaseEntry> table;
  std::vector<std::pair<std::string, std::string>> closure;
  std::vector<RootReflection> reflections = positive_root_reflections(sys);
  for (std::size_t i = 0; i < elts.size(); ++i) {
    const GroupElt& w = elts[i];
    for (int s = 0; s < sys->rank(); ++s) {
      GroupElt ws = w * sys->generator(s);
      int target = index.at(word_string(ws));
      CaseEntry e;
      e.kind = w.is_right_descent(s) ? RootCase::b2 : RootCase::b1;
      e.targets = {target};
      table[{static_cast<int>(i), s}] = e;
    }
    for (const GroupElt& y : bruhat_lower_covers(w, reflections))
      closure.emplace_back(params[index.at(word_string(y))].orbit, params[i].orbit);
  }
  OrbitDatum datum(sys, Involution::identity(sys->rank()), std::nullopt, std::move(params),
                   std::move(table), std::move(closure));
  ValidationReport report = datum.validate();
  if (!report.ok())
    throw Error(Errc::bad_input, "gen_complex produced an invalid datum: " + report.to_string());
  return datum;
}

OrbitDatum gen_complex(const std::string& cartan_type) {
  return gen_complex(CoxeterSystem::make(cartan_type));
}

namespace {

OrbitDatum make_sl2r() {
  auto sys = CoxeterSystem::make("A1");
  std::vector<Param> params = {
      {"Q0", "Q0", 0, "triv", true, true, false},
      {"Qinf", "Qinf", 0, "triv", true, true, false},
      {"O_triv", "O", 1, "triv", true, false, false},
      {"O_sgn", "O", 1, "sgn", false, false, true}, // the Mobius local system is clean
  };
  std::map<std::pair<int, int>, CaseEntry> table;
  table[{0, 0}] = {RootCase::d1, {2, 1}}; // Q0: type I noncompact imaginary
  table[{1, 0}] = {RootCase::d1, {2, 0}};
  table[{2, 0}] = {RootCase::d2, {0, 1}}; // open orbit, trivial system: type I real
  table[{3, 0}] = {RootCase::e, {}};      // Mobius system: real nonparity
  std::vector<std::pair<std::string, std::string>> closure = {{"Q0", "O"}, {"Qinf", "O"}};
  return OrbitDatum(sys, Involution::identity(1), std::nullopt, std::move(params),
                    std::move(table), std::move(closure));
}

OrbitDatum make_psl2r() {
  auto sys = CoxeterSystem::make("A1");
  std::vector<Param> params = {
      {"Q", "Q", 0, "triv", true, true, false},
      {"O_triv", "O", 1, "triv", true, false, false},
      {"O_sgn", "O", 1, "sgn", false, false, false},
  };
  std::map<std::pair<int, int>, CaseEntry> table;
  table[{0, 0}] = {RootCase::c1, {1, 2}}; // type II noncompact imaginary
  table[{1, 0}] = {RootCase::c2, {2, 0}}; // type II real: [other system, lower param]
  table[{2, 0}] = {RootCase::c2, {1, 0}};
  std::vector<std::pair<std::string, std::string>> closure = {{"Q", "O"}};
  return OrbitDatum(sys, Involution::identity(1), std::nullopt, std::move(params),
                    std::move(table), std::move(closure));
}

} // namespace

OrbitDatum builtin_datum(const std::string& name) {
  OrbitDatum datum = [&]() {
    if (name == "sl2r") return make_sl2r();
    if (name == "psl2r") return make_psl2r();
    if (name == "sl2c") return gen_complex("A1");
    throw Error(Errc::bad_input, "unknown builtin datum: " + name);
  }();
  ValidationReport report = datum.validate();
  if (!report.ok())
    throw Error(Errc::bad_input, "builtin datum failed validation: " + report.to_string());
  return datum;
}

} // namespace klv
