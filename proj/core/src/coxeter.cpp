#include "klv/coxeter.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "klv/error.hpp"

namespace klv {

namespace {

unsigned long long factorial(int n) {
  unsigned long long r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<unsigned long long>(i);
  return r;
}

} // namespace

// ---------------------------------------------------------------- GroupElt

long long GroupElt::at(int i, int j) const { return mat_[i * sys_->rank() + j]; }

bool GroupElt::is_identity() const {
  int n = sys_->rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

GroupElt GroupElt::operator*(const GroupElt& o) const {
  if (!sys_ || !o.sys_ || !sys_->same_as(*o.sys_))
    throw Error(Errc::mixed_systems, "cannot multiply elements of different Coxeter systems");
  int n = sys_->rank();
  std::vector<long long> m(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long long a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < n; ++j) m[i * n + j] += a * o.at(k, j);
    }
  return GroupElt(sys_, std::move(m));
}

bool GroupElt::is_right_descent(int s) const {
  // ws < w iff w(alpha_s) is a negative root; roots have uniform coordinate sign.
  int n = sys_->rank();
  for (int i = 0; i < n; ++i)
    if (at(i, s) > 0) return false;
  return true;
}

int GroupElt::length() const {
  GroupElt w = *this;
  int n = sys_->rank();
  int len = 0;
  while (!w.is_identity()) {
    int s = -1;
    for (int t = 0; t < n; ++t)
      if (w.is_right_descent(t)) {
        s = t;
        break;
      }
    if (s < 0) throw Error(Errc::bad_input, "element has no descent but is not the identity");
    w = w * sys_->generator(s);
    ++len;
  }
  return len;
}

GroupElt GroupElt::inverse() const {
  GroupElt w = *this;
  GroupElt inv = sys_->identity();
  int n = sys_->rank();
  while (!w.is_identity()) {
    int s = -1;
    for (int t = 0; t < n; ++t)
      if (w.is_right_descent(t)) {
        s = t;
        break;
      }
    if (s < 0) throw Error(Errc::bad_input, "element has no descent but is not the identity");
    GroupElt g = sys_->generator(s);
    w = w * g;
    inv = inv * g; // w * s_1 * ... * s_m = e, so s_1 ... s_m = w^{-1}
  }
  return inv;
}

bool GroupElt::is_left_descent(int s) const {
  // sw < w iff w^{-1}(alpha_s) < 0.
  return inverse().is_right_descent(s);
}

std::vector<int> GroupElt::reduced_word() const {
  // Smallest left descent first yields the ShortLex-minimal reduced word.
  std::vector<int> word;
  GroupElt w = *this;
  GroupElt winv = inverse();
  int n = sys_->rank();
  while (!w.is_identity()) {
    int s = -1;
    for (int t = 0; t < n; ++t)
      if (winv.is_right_descent(t)) { // right descent of w^{-1} = left descent of w
        s = t;
        break;
      }
    if (s < 0) throw Error(Errc::bad_input, "element has no descent but is not the identity");
    GroupElt g = sys_->generator(s);
    w = g * w;
    winv = winv * g;
    word.push_back(s);
  }
  return word;
}

// ---------------------------------------------------------- CoxeterSystem

bool Involution::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

Involution Involution::identity(int rank) {
  Involution t;
  t.perm.resize(rank);
  for (int i = 0; i < rank; ++i) t.perm[i] = i;
  return t;
}

CoxeterPtr CoxeterSystem::make(const std::string& cartan_type) {
  if (cartan_type.size() < 2)
    throw Error(Errc::bad_input, "bad Cartan type: " + cartan_type);
  char family = cartan_type[0];
  int n = 0;
  try {
    n = std::stoi(cartan_type.substr(1));
  } catch (...) {
    throw Error(Errc::bad_input, "bad Cartan type: " + cartan_type);
  }
  if (n < 1) throw Error(Errc::bad_input, "bad Cartan rank: " + cartan_type);

  auto chain = [&](int rank) {
    std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 2));
    for (int i = 0; i < rank; ++i) m[i][i] = 1;
    for (int i = 0; i + 1 < rank; ++i) m[i][i + 1] = m[i + 1][i] = 3;
    return m;
  };

  std::vector<std::vector<int>> m;
  switch (family) {
    case 'A':
      m = chain(n);
      break;
    case 'B':
    case 'C':
      if (n < 2) throw Error(Errc::bad_input, "bad Cartan type: " + cartan_type);
      m = chain(n);
      m[n - 2][n - 1] = m[n - 1][n - 2] = 4;
      break;
    case 'D':
      if (n < 3) throw Error(Errc::bad_input, "bad Cartan type: " + cartan_type);
      m = chain(n - 1);
      m.resize(n);
      for (auto& row : m) row.resize(n, 2);
      m[n - 1][n - 1] = 1;
      m[n - 1][n - 3] = m[n - 3][n - 1] = 3;
      break;
    case 'E': {
      if (n < 6 || n > 8) throw Error(Errc::bad_input, "bad Cartan type: " + cartan_type);
      // Bourbaki: chain 0-2-3-4-...-(n-1), node 1 attached to node 3.
      m.assign(n, std::vector<int>(n, 2));
      for (int i = 0; i < n; ++i) m[i][i] = 1;
      auto bond = [&](int a, int b) { m[a][b] = m[b][a] = 3; };
      bond(0, 2);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
      bond(1, 3);
      break;
    }
    case 'F':
      if (n != 4) throw Error(Errc::bad_input, "bad Cartan type: " + cartan_type);
      m = chain(4);
      m[1][2] = m[2][1] = 4;
      break;
    case 'G':
      if (n != 2) throw Error(Errc::bad_input, "bad Cartan type: " + cartan_type);
      m = chain(2);
      m[0][1] = m[1][0] = 6;
      break;
    default:
      throw Error(Errc::bad_input, "bad Cartan type: " + cartan_type);
  }
  auto sys = make_from_matrix(m);
  const_cast<CoxeterSystem&>(*sys).label_ = cartan_type;
  return sys;
}

CoxeterPtr CoxeterSystem::make_from_matrix(const std::vector<std::vector<int>>& m) {
  auto sys = std::shared_ptr<CoxeterSystem>(new CoxeterSystem());
  int n = static_cast<int>(m.size());
  if (n == 0) throw Error(Errc::bad_input, "empty Coxeter matrix");
  sys->rank_ = n;
  sys->coxmat_.assign(n * n, 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n)
      throw Error(Errc::bad_input, "Coxeter matrix is not square");
    for (int j = 0; j < n; ++j) {
      int e = m[i][j];
      if (i == j && e != 1) throw Error(Errc::bad_input, "Coxeter matrix diagonal must be 1");
      if (i != j && e != 0 && e < 2)
        throw Error(Errc::bad_input, "off-diagonal Coxeter entries must be >= 2 (0 = infinity)");
      if (m[i][j] != m[j][i]) throw Error(Errc::bad_input, "Coxeter matrix must be symmetric");
      sys->coxmat_[i * n + j] = e;
    }
  }
  sys->build_from_coxeter_matrix();
  sys->classify();
  return sys;
}

void CoxeterSystem::build_from_coxeter_matrix() {
  int n = rank_;
  bool crystallographic = true;
  for (int i = 0; i < n && crystallographic; ++i)
    for (int j = 0; j < n; ++j) {
      int m = coxmat_[i * n + j];
      if (i != j && m != 2 && m != 3 && m != 4 && m != 6 && m != 0) {
        crystallographic = false;
        break;
      }
    }
  if (!crystallographic) return; // element operations will be rejected

  cartan_.assign(n * n, 0);
  for (int i = 0; i < n; ++i) cartan_[i * n + i] = 2;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int m = coxmat_[i * n + j];
      long long a = 0, b = 0; // a = -cartan[i][j], b = -cartan[j][i]
      switch (m) {
        case 2: a = b = 0; break;
        case 3: a = b = 1; break;
        case 4: a = 1; b = 2; break;
        case 6: a = 1; b = 3; break;
        case 0: a = b = 2; break;
        default: break;
      }
      cartan_[i * n + j] = -a;
      cartan_[j * n + i] = -b;
    }
}

void CoxeterSystem::classify() {
  if (cartan_.empty()) return;
  int n = rank_;
  // connected components of the Coxeter diagram (edges where m >= 3 or m = 0)
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::queue<int> bfs;
    bfs.push(i);
    comp[i] = ncomp;
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (int v2 = 0; v2 < n; ++v2) {
        int m = coxmat_[u * n + v2];
        if (u != v2 && m != 2 && comp[v2] < 0) {
          comp[v2] = ncomp;
          bfs.push(v2);
        }
      }
    }
    ++ncomp;
  }

  unsigned long long total = 1;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) nodes.push_back(i);
    int k = static_cast<int>(nodes.size());
    std::vector<std::pair<int, int>> edges; // (local pair) with label
    std::vector<int> labels;
    std::vector<int> degree(k, 0);
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) {
        int m = coxmat_[nodes[a] * n + nodes[b]];
        if (m == 0) { finite_order_.reset(); return; }
        if (m >= 3) {
          edges.emplace_back(a, b);
          labels.push_back(m);
          ++degree[a];
          ++degree[b];
        }
      }
    unsigned long long ord = 0;
    int branch = 0, branch_node = -1;
    for (int a = 0; a < k; ++a)
      if (degree[a] >= 3) {
        ++branch;
        branch_node = a;
      }
    int n4 = 0, n6 = 0;
    for (int L : labels) {
      if (L == 4) ++n4;
      if (L == 6) ++n6;
      if (L > 6) { finite_order_.reset(); return; }
    }
    if (k == 1) {
      ord = 2; // A1
    } else if (branch == 0) {
      // a path; find its ends and walk it
      std::vector<int> ends;
      for (int a = 0; a < k; ++a)
        if (degree[a] == 1) ends.push_back(a);
      if (ends.size() != 2 || static_cast<int>(edges.size()) != k - 1) {
        finite_order_.reset();
        return; // a cycle (affine) or disconnected bookkeeping error
      }
      // walk from ends[0]
      std::vector<int> order_lbl;
      std::vector<bool> seen(k, false);
      int cur = ends[0];
      seen[cur] = true;
      for (int step = 0; step + 1 < k; ++step) {
        for (std::size_t e = 0; e < edges.size(); ++e) {
          auto [a, b] = edges[e];
          int nxt = -1;
          if (a == cur && !seen[b]) nxt = b;
          if (b == cur && !seen[a]) nxt = a;
          if (nxt >= 0) {
            order_lbl.push_back(labels[e]);
            cur = nxt;
            seen[cur] = true;
            break;
          }
        }
      }
      bool all3 = (n4 == 0 && n6 == 0);
      if (all3) {
        ord = factorial(k + 1); // A_k
      } else if (n6 == 1 && n4 == 0 && k == 2) {
        ord = 12; // G2
      } else if (n4 == 1 && n6 == 0) {
        if (order_lbl.front() == 4 || order_lbl.back() == 4) {
          ord = (1ull << k) * factorial(k); // B_k / C_k
        } else if (k == 4 && order_lbl[1] == 4) {
          ord = 1152; // F4
        } else {
          finite_order_.reset();
          return;
        }
      } else {
        finite_order_.reset();
        return;
      }
    } else if (branch == 1 && degree[branch_node] == 3 && n4 == 0 && n6 == 0 &&
               static_cast<int>(edges.size()) == k - 1) {
      // legs from the branch node
      std::vector<int> legs;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [a, b] = edges[e];
        int start = -1;
        if (a == branch_node) start = b;
        if (b == branch_node) start = a;
        if (start < 0) continue;
        int len = 1, prev = branch_node, cur = start;
        bool more = true;
        while (more) {
          more = false;
          for (std::size_t e2 = 0; e2 < edges.size(); ++e2) {
            auto [x, y] = edges[e2];
            int nxt = -1;
            if (x == cur && y != prev) nxt = y;
            if (y == cur && x != prev) nxt = x;
            if (nxt >= 0) {
              prev = cur;
              cur = nxt;
              ++len;
              more = true;
              break;
            }
          }
        }
        legs.push_back(len);
      }
      std::sort(legs.begin(), legs.end());
      if (legs.size() != 3) {
        finite_order_.reset();
        return;
      }
      if (legs[0] == 1 && legs[1] == 1) {
        ord = (1ull << (k - 1)) * factorial(k); // D_k
      } else if (legs[0] == 1 && legs[1] == 2 && legs[2] == 2) {
        ord = 51840; // E6
      } else if (legs[0] == 1 && legs[1] == 2 && legs[2] == 3) {
        ord = 2903040; // E7
      } else if (legs[0] == 1 && legs[1] == 2 && legs[2] == 4) {
        ord = 696729600; // E8
      } else {
        finite_order_.reset();
        return;
      }
    } else {
      finite_order_.reset();
      return;
    }
    total *= ord;
  }
  finite_order_ = total;
}

unsigned long long CoxeterSystem::order() const {
  if (!finite_order_) throw Error(Errc::infinite_group, "Coxeter group is not finite Weyl");
  return *finite_order_;
}

GroupElt CoxeterSystem::identity() const {
  if (cartan_.empty())
    throw Error(Errc::bad_input,
                "element operations need a crystallographic Coxeter matrix (entries 2,3,4,6 or infinity)");
  int n = rank_;
  std::vector<long long> m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return GroupElt(shared_from_this(), std::move(m));
}

GroupElt CoxeterSystem::generator(int s) const {
  if (s < 0 || s >= rank_) throw Error(Errc::bad_input, "generator index out of range");
  GroupElt e = identity();
  int n = rank_;
  std::vector<long long> m(n * n, 0);
  // s(alpha_j) = alpha_j - a_{sj} alpha_s
  for (int j = 0; j < n; ++j) {
    m[j * n + j] = 1;
    m[s * n + j] -= cartan_[s * n + j];
  }
  return GroupElt(shared_from_this(), std::move(m));
}

GroupElt CoxeterSystem::from_word(const std::vector<int>& word) const {
  GroupElt w = identity();
  for (int s : word) w = w * generator(s);
  return w;
}

bool CoxeterSystem::same_as(const CoxeterSystem& o) const {
  return this == &o || (rank_ == o.rank_ && coxmat_ == o.coxmat_);
}

// ------------------------------------------------------------- involution

void validate_involution(const CoxeterSystem& sys, const Involution& theta) {
  int n = sys.rank();
  if (static_cast<int>(theta.perm.size()) != n)
    throw Error(Errc::bad_input, "involution permutation has wrong size");
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    int j = theta.perm[i];
    if (j < 0 || j >= n) throw Error(Errc::bad_input, "involution entry out of range");
    if (seen[j]) throw Error(Errc::bad_input, "involution is not a permutation");
    seen[j] = true;
  }
  for (int i = 0; i < n; ++i)
    if (theta.perm[theta.perm[i]] != i)
      throw Error(Errc::bad_input, "involution squared is not the identity");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sys.coxeter_m(theta.perm[i], theta.perm[j]) != sys.coxeter_m(i, j))
        throw Error(Errc::bad_input, "involution does not preserve the Coxeter matrix");
}

GroupElt theta_apply(const Involution& theta, const GroupElt& x) {
  auto sys = x.system();
  GroupElt r = sys->identity();
  for (int s : x.reduced_word()) r = r * sys->generator(theta.perm[s]);
  return r;
}

// ------------------------------------------------------------ Bruhat order

bool bruhat_leq(const GroupElt& x, const GroupElt& y) {
  if (!x.system()->same_as(*y.system()))
    throw Error(Errc::mixed_systems, "Bruhat comparison across systems");
  GroupElt a = x, b = y;
  auto sys = x.system();
  while (true) {
    if (a == b) return true;
    int lb = b.length();
    if (a.length() > lb) return false;
    if (lb == 0) return a.is_identity();
    int s = -1;
    for (int t = 0; t < sys->rank(); ++t)
      if (b.is_right_descent(t)) {
        s = t;
        break;
      }
    GroupElt g = sys->generator(s);
    b = b * g;
    if (a.is_right_descent(s)) a = a * g;
  }
}

std::set<GroupElt> lower_interval(const GroupElt& x) {
  auto sys = x.system();
  if (x.is_identity()) return {x};
  int s = -1;
  for (int t = 0; t < sys->rank(); ++t)
    if (x.is_right_descent(t)) {
      s = t;
      break;
    }
  GroupElt g = sys->generator(s);
  std::set<GroupElt> lower = lower_interval(x * g);
  std::set<GroupElt> out = lower;
  for (const auto& y : lower) out.insert(y * g);
  return out;
}

// -------------------------------------------------------------- enumeration

std::vector<GroupElt> enumerate(const CoxeterPtr& sys) {
  if (!sys->is_finite_weyl())
    throw Error(Errc::infinite_group, "enumeration requires a finite Weyl group");
  std::set<GroupElt> seen;
  std::queue<GroupElt> bfs;
  GroupElt e = sys->identity();
  seen.insert(e);
  bfs.push(e);
  while (!bfs.empty()) {
    GroupElt w = bfs.front();
    bfs.pop();
    for (int s = 0; s < sys->rank(); ++s) {
      GroupElt ws = w * sys->generator(s);
      if (seen.insert(ws).second) bfs.push(ws);
    }
  }
  std::vector<GroupElt> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), output_less);
  return out;
}

std::vector<GroupElt> theta_fixed(const CoxeterPtr& sys, const Involution& theta) {
  validate_involution(*sys, theta);
  std::vector<GroupElt> out;
  for (const auto& w : enumerate(sys))
    if (theta_apply(theta, w) == w) out.push_back(w);
  return out;
}

std::vector<GroupElt> subgroup_closure(const CoxeterPtr& sys, const SubgroupSpec& spec,
                                       std::size_t cap) {
  std::vector<GroupElt> gens;
  for (const auto& word : spec.generator_words) gens.push_back(sys->from_word(word));
  std::set<GroupElt> seen;
  std::queue<GroupElt> bfs;
  GroupElt e = sys->identity();
  seen.insert(e);
  bfs.push(e);
  while (!bfs.empty()) {
    GroupElt w = bfs.front();
    bfs.pop();
    for (const auto& g : gens) {
      GroupElt wg = w * g;
      if (seen.insert(wg).second) {
        if (seen.size() > cap)
          throw Error(Errc::infinite_group, "subgroup closure exceeded cap; is W_K finite?");
        bfs.push(wg);
      }
    }
  }
  std::vector<GroupElt> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), output_less);
  return out;
}

std::vector<GroupElt> coset_reps(const CoxeterPtr& sys, const Involution& theta,
                                 const SubgroupSpec& wk) {
  validate_involution(*sys, theta);
  for (const auto& word : wk.generator_words) {
    GroupElt g = sys->from_word(word);
    if (theta_apply(theta, g) != g)
      throw Error(Errc::subgroup_not_theta_fixed,
                  "W_K generator is not fixed by the involution");
  }
  std::vector<GroupElt> wtheta = theta_fixed(sys, theta);
  std::set<GroupElt> wtheta_set(wtheta.begin(), wtheta.end());
  std::vector<GroupElt> wkelts = subgroup_closure(sys, wk);
  for (const auto& k : wkelts)
    if (!wtheta_set.count(k))
      throw Error(Errc::subgroup_not_theta_fixed, "W_K is not contained in W^theta");

  std::set<GroupElt> assigned;
  std::vector<GroupElt> reps;
  for (const auto& w : wtheta) { // already in (length, ShortLex) order
    if (assigned.count(w)) continue;
    GroupElt rep = w;
    for (const auto& k : wkelts) {
      GroupElt kw = k * w;
      assigned.insert(kw);
      if (output_less(kw, rep)) rep = kw;
    }
    reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end(), output_less);
  return reps;
}

// --------------------------------------------------------------- parabolic

namespace {

std::vector<GroupElt> parabolic_elements(const CoxeterPtr& sys, const std::set<int>& I) {
  // Finiteness of W_I from the classification of the subdiagram.
  std::vector<int> nodes(I.begin(), I.end());
  std::vector<std::vector<int>> sub(nodes.size(), std::vector<int>(nodes.size(), 2));
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    sub[a][a] = 1;
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      sub[a][b] = sub[b][a] = sys->coxeter_m(nodes[a], nodes[b]);
      if (sub[a][b] == 0)
        throw Error(Errc::infinite_group, "infinite parabolic subgroup");
    }
  }
  if (!nodes.empty()) {
    auto subsys = CoxeterSystem::make_from_matrix(sub);
    if (!subsys->is_finite_weyl())
      throw Error(Errc::infinite_group, "infinite parabolic subgroup");
  }
  SubgroupSpec spec;
  for (int s : I) spec.generator_words.push_back({s});
  return subgroup_closure(sys, spec);
}

} // namespace

LaurentV parabolic_poincare(const CoxeterPtr& sys, const std::set<int>& I) {
  LaurentV p;
  for (const auto& y : parabolic_elements(sys, I)) p += LaurentV::q(y.length());
  return p;
}

GroupElt longest_parabolic(const CoxeterPtr& sys, const std::set<int>& I) {
  GroupElt best = sys->identity();
  int best_len = 0;
  for (const auto& y : parabolic_elements(sys, I)) {
    int l = y.length();
    if (l > best_len) {
      best = y;
      best_len = l;
    }
  }
  return best;
}

// -------------------------------------------------------------- reflections

std::vector<long long> GroupElt::act_on_root(const std::vector<long long>& coords) const {
  int n = sys_->rank();
  if (static_cast<int>(coords.size()) != n)
    throw Error(Errc::bad_input, "root vector has wrong dimension");
  std::vector<long long> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += at(i, j) * coords[j];
  return out;
}

std::vector<RootReflection> positive_root_reflections(const CoxeterPtr& sys) {
  if (!sys->is_finite_weyl())
    throw Error(Errc::infinite_group, "root enumeration requires a finite Weyl group");
  int n = sys->rank();
  std::map<std::vector<long long>, GroupElt> by_root;
  std::queue<std::pair<std::vector<long long>, GroupElt>> bfs;
  for (int s = 0; s < n; ++s) {
    std::vector<long long> alpha(n, 0);
    alpha[s] = 1;
    if (by_root.emplace(alpha, sys->generator(s)).second) bfs.push({alpha, sys->generator(s)});
  }
  while (!bfs.empty()) {
    auto [root, refl] = bfs.front();
    bfs.pop();
    for (int s = 0; s < n; ++s) {
      GroupElt g = sys->generator(s);
      std::vector<long long> image = g.act_on_root(root);
      bool positive = true;
      for (long long c : image)
        if (c < 0) positive = false;
      if (!positive) continue; // s_beta and s_{-beta} coincide
      GroupElt conj = g * refl * g;
      if (by_root.emplace(image, conj).second) bfs.push({image, conj});
    }
  }
  std::vector<RootReflection> out;
  for (const auto& [root, refl] : by_root) out.push_back({root, refl});
  return out;
}

std::vector<GroupElt> bruhat_lower_covers(const GroupElt& w,
                                          const std::vector<RootReflection>& reflections) {
  std::vector<GroupElt> out;
  int lw = w.length();
  for (const auto& [root, t] : reflections) {
    // l(wt) < l(w) iff w sends the root of t negative
    std::vector<long long> image = w.act_on_root(root);
    bool negative = true;
    for (long long c : image)
      if (c > 0) negative = false;
    if (!negative) continue;
    GroupElt wt = w * t;
    if (wt.length() == lw - 1) out.push_back(wt);
  }
  std::sort(out.begin(), out.end(), output_less);
  return out;
}

// ---------------------------------------------------------------- descents

std::set<int> right_descents(const GroupElt& x) {
  std::set<int> out;
  for (int s = 0; s < x.system()->rank(); ++s)
    if (x.is_right_descent(s)) out.insert(s);
  return out;
}

std::set<int> left_descents(const GroupElt& x) { return right_descents(x.inverse()); }

// ------------------------------------------------------------------ output

bool output_less(const GroupElt& a, const GroupElt& b) {
  int la = a.length(), lb = b.length();
  if (la != lb) return la < lb;
  return a.reduced_word() < b.reduced_word();
}

std::string word_string(const GroupElt& x) {
  auto word = x.reduced_word();
  if (word.empty()) return "e";
  std::ostringstream out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out << ".";
    out << word[i];
  }
  return out.str();
}

std::vector<int> parse_word_string(const std::string& text) {
  if (text.empty() || text == "e") return {};
  std::vector<int> word;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, '.')) {
    try {
      word.push_back(std::stoi(part));
    } catch (...) {
      throw Error(Errc::bad_input, "bad word string: " + text);
    }
  }
  return word;
}

} // namespace klv
