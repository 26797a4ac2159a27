#include "klv/bimod_char.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "klv/error.hpp"

namespace klv {

namespace {

std::vector<std::vector<mpq_class>> to_mpq_matrix(const std::vector<std::vector<long>>& m) {
  std::vector<std::vector<mpq_class>> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (long v : m[i]) out[i].emplace_back(v);
  return out;
}

std::vector<std::vector<mpq_class>> mat_mul(const std::vector<std::vector<mpq_class>>& a,
                                            const std::vector<std::vector<mpq_class>>& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  std::vector<std::vector<mpq_class>> out(n, std::vector<mpq_class>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

std::vector<std::vector<mpq_class>> mat_identity(std::size_t n) {
  std::vector<std::vector<mpq_class>> out(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

std::vector<std::vector<mpq_class>> mat_inverse(std::vector<std::vector<mpq_class>> a) {
  std::size_t n = a.size();
  auto inv = mat_identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw Error(Errc::bad_input, "singular W_K action matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    mpq_class d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      mpq_class f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

GradedChar free_poly_series(int nvars, int bound) {
  // grchar of Q[x_1..x_n] with generators in degree 2
  GradedChar out;
  for (int d = 0; 2 * d <= bound; ++d) {
    // monomials of polynomial degree d: C(d + nvars - 1, nvars - 1)
    mpz_class count = 1;
    for (int i = 1; i < nvars; ++i) {
      count *= d + i;
      count /= i;
    }
    out[2 * d] = nvars == 0 ? (d == 0 ? 1 : 0) : count;
  }
  return out;
}

} // namespace

RingsSpec rank1_rings() {
  RingsSpec s;
  s.r_gens = {"alpha"};
  s.p_gens = {"alpha"};
  s.simple_roots = {{1}};
  s.w_action = {{{-1}}};
  s.phi = {{1}};
  return s;
}

RingsSpec a1xa1_diagonal_rings() {
  RingsSpec s;
  s.r_gens = {"a1", "a2"};
  s.p_gens = {"b"};
  s.simple_roots = {{1, 0}, {0, 1}};
  s.w_action = {{{-1, 0}, {0, 1}}, {{1, 0}, {0, -1}}};
  s.phi = {{1, 1}};
  s.wk_words = {{0, 1}};
  s.wk_p_action = {{{-1}}};
  return s;
}

BimodRings::BimodRings(RingsSpec spec) : spec_(std::move(spec)) {
  int nr = n_r();
  if (spec_.simple_roots.size() != spec_.w_action.size())
    throw Error(Errc::bad_input, "one simple root per reflection is required");
  for (const auto& root : spec_.simple_roots) {
    if (static_cast<int>(root.size()) != nr)
      throw Error(Errc::bad_input, "simple root has wrong coordinate count");
    MPoly a(nr);
    for (int i = 0; i < nr; ++i) a += MPoly::variable(nr, i) * mpq_class(root[i]);
    alphas_.push_back(a);
  }
  for (const auto& m : spec_.w_action) {
    if (static_cast<int>(m.size()) != nr)
      throw Error(Errc::bad_input, "W action matrix has wrong shape");
    w_mats_.push_back(to_mpq_matrix(m));
  }
  if (spec_.wk_words.size() != spec_.wk_p_action.size())
    throw Error(Errc::bad_input, "each W_K generator needs a P action matrix");
  for (const auto& m : spec_.wk_p_action) {
    if (static_cast<int>(m.size()) != n_p())
      throw Error(Errc::bad_input, "W_K action matrix has wrong shape");
    wk_mats_.push_back(to_mpq_matrix(m));
  }
  // every s acts as a reflection: s(alpha_s) = -alpha_s and s^2 = id
  for (int s = 0; s < rank_s(); ++s) {
    if (act_s(alphas_[s], s) != -alphas_[s])
      throw Error(Errc::bad_input, "s(alpha_s) != -alpha_s for reflection " + std::to_string(s));
    for (int i = 0; i < nr; ++i) {
      MPoly g = r_var(i);
      if (act_s(act_s(g, s), s) != g)
        throw Error(Errc::bad_input, "reflection squared is not the identity");
    }
  }
}

std::shared_ptr<const BimodRings> BimodRings::make(RingsSpec spec) {
  return std::shared_ptr<const BimodRings>(new BimodRings(std::move(spec)));
}

std::shared_ptr<const BimodRings> BimodRings::regular() const {
  RingsSpec r = spec_;
  r.p_gens = r.r_gens;
  r.phi.assign(n_r(), std::vector<long>(n_r(), 0));
  for (int i = 0; i < n_r(); ++i) r.phi[i][i] = 1;
  r.wk_words.clear();
  r.wk_p_action.clear();
  return make(std::move(r));
}

MPoly BimodRings::act_s(const MPoly& f, int s) const { return f.apply_linear(w_mats_.at(s)); }

MPoly BimodRings::act_word(const MPoly& f, const std::vector<int>& word) const {
  MPoly out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = act_s(out, *it);
  return out;
}

MPoly BimodRings::phi(const MPoly& f) const {
  std::vector<std::vector<mpq_class>> m = to_mpq_matrix(spec_.phi);
  if (static_cast<int>(m.size()) != n_p())
    throw Error(Errc::bad_input, "phi matrix has wrong shape");
  return f.apply_linear(m);
}

MPoly BimodRings::act_wk_gen(const MPoly& p, int k) const {
  return p.apply_linear(wk_mats_.at(k));
}

MPoly BimodRings::act_p_matrix(const MPoly& p,
                               const std::vector<std::vector<mpq_class>>& m) const {
  return p.apply_linear(m);
}

std::vector<std::vector<mpq_class>> BimodRings::wk_word_matrix(
    const std::vector<int>& wk_word) const {
  auto out = mat_identity(n_p());
  for (int k : wk_word) out = mat_mul(out, wk_mats_.at(k));
  return out;
}

MPoly BimodRings::demazure(const MPoly& f, int s) const {
  MPoly num = f - act_s(f, s);
  if (num.is_zero()) return MPoly(n_r());
  auto quo = MPoly::div_exact(num, alphas_.at(s));
  if (!quo)
    throw Error(Errc::bad_input, "Demazure division was not exact (inconsistent ring data)");
  return *quo;
}

std::pair<MPoly, MPoly> BimodRings::split_s(const MPoly& g, int s) const {
  MPoly g1 = demazure(g, s) * mpq_class(1, 2);
  MPoly g0 = g - g1 * alphas_.at(s);
  return {g0, g1};
}

GradedChar BimodRings::series_r(int bound) const { return free_poly_series(n_r(), bound); }
GradedChar BimodRings::series_p(int bound) const { return free_poly_series(n_p(), bound); }

std::vector<MPoly> BimodRings::invariant_spanning_set(int maxdeg) const {
  // enumerate the (small) matrix group generated by the W_K matrices
  std::vector<std::vector<std::vector<mpq_class>>> group{mat_identity(n_p())};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<std::vector<mpq_class>>> next = group;
    for (const auto& g : group)
      for (const auto& m : wk_mats_) {
        auto gm = mat_mul(g, m);
        if (std::find(next.begin(), next.end(), gm) == next.end()) {
          next.push_back(gm);
          grew = true;
          if (next.size() > 4096)
            throw Error(Errc::infinite_group, "W_K matrix group exceeded enumeration cap");
        }
      }
    group = std::move(next);
  }
  std::vector<MPoly> out;
  for (const auto& e : MPoly::exponents_up_to(n_p(), maxdeg)) {
    MPoly mono = MPoly::monomial(n_p(), e, 1);
    MPoly sym(n_p());
    for (const auto& g : group) sym += mono.apply_linear(g);
    if (sym.is_zero()) continue;
    if (std::find(out.begin(), out.end(), sym) == out.end()) out.push_back(sym);
  }
  return out;
}

// ------------------------------------------------------------------- tower

BimodTower::BimodTower(std::shared_ptr<const BimodRings> rings, std::vector<int> x_word,
                       std::vector<int> bs_word)
    : rings_(std::move(rings)), x_word_(std::move(x_word)), bs_word_(std::move(bs_word)) {}

BimodTower::Elem BimodTower::zero() const {
  return Elem(rank(), MPoly(rings_->n_p()));
}

BimodTower::Elem BimodTower::basis(int mask) const {
  Elem e = zero();
  e.at(mask) = MPoly::constant(rings_->n_p(), 1);
  return e;
}

BimodTower::Elem BimodTower::add(const Elem& a, const Elem& b) const {
  Elem out = a;
  for (int i = 0; i < rank(); ++i) out[i] += b[i];
  return out;
}

bool BimodTower::equal(const Elem& a, const Elem& b) const {
  for (int i = 0; i < rank(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

BimodTower::Elem BimodTower::left_mul(const MPoly& f, const Elem& e) const {
  Elem out = e;
  for (auto& c : out) c *= f;
  return out;
}

BimodTower::Elem BimodTower::right_act_level(const Elem& e, const MPoly& g, int level) const {
  if (level == 0) {
    MPoly image = rings_->phi(rings_->act_word(g, x_word_));
    return {e[0] * image};
  }
  int s = bs_word_[level - 1];
  auto [g0, g1] = rings_->split_s(g, s);
  MPoly a2g1 = rings_->alpha(s) * rings_->alpha(s) * g1;
  int half = 1 << (level - 1);
  Elem lo(e.begin(), e.begin() + half);   // component with 1 in the top factor
  Elem hi(e.begin() + half, e.end());     // component with alpha_s in the top factor
  // (m x 1) g = m g0 x 1 + m g1 x alpha ; (m x alpha) g = m(alpha^2 g1) x 1 + m g0 x alpha
  Elem out_lo = right_act_level(lo, g0, level - 1);
  Elem hi_a2g1 = right_act_level(hi, a2g1, level - 1);
  Elem out_hi = right_act_level(lo, g1, level - 1);
  Elem hi_g0 = right_act_level(hi, g0, level - 1);
  Elem out(rank() >= 2 * half ? 2 * half : rank(), MPoly(rings_->n_p()));
  for (int i = 0; i < half; ++i) {
    out[i] = out_lo[i] + hi_a2g1[i];
    out[half + i] = out_hi[i] + hi_g0[i];
  }
  return out;
}

BimodTower::Elem BimodTower::right_act(const Elem& e, const MPoly& g) const {
  if (static_cast<int>(e.size()) != rank())
    throw Error(Errc::bad_input, "element has wrong rank for this tower");
  return right_act_level(e, g, factors());
}

BimodTower BimodTower::tensor_Bs(int s) const {
  std::vector<int> word = bs_word_;
  word.push_back(s);
  return BimodTower(rings_, x_word_, word);
}

int BimodTower::basis_degree(int mask) const {
  int deg = -factors();
  for (int i = 0; i < factors(); ++i)
    if (mask & (1 << i)) deg += 2;
  return deg;
}

GradedChar BimodTower::grchar(int bound) const {
  GradedChar p_series = rings_->series_p(bound + factors());
  GradedChar out;
  for (int mask = 0; mask < rank(); ++mask) {
    int shift = basis_degree(mask);
    for (const auto& [d, c] : p_series) {
      int i = d + shift;
      if (i <= bound) out[i] += c;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::string BimodTower::elem_to_string(const Elem& e) const {
  std::ostringstream out;
  bool first = true;
  for (int mask = 0; mask < rank(); ++mask) {
    if (e[mask].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << e[mask].to_string(rings_->spec().p_gens) << ")*e" << mask;
  }
  return first ? "0" : out.str();
}

// --------------------------------------------------------------- verifiers

namespace {

std::vector<MPoly> ring_monomials(int nvars, int ring_degree_bound) {
  std::vector<MPoly> out;
  for (const auto& e : MPoly::exponents_up_to(nvars, ring_degree_bound / 2))
    out.push_back(MPoly::monomial(nvars, e, 1));
  return out;
}

GradedChar shift_char(const GradedChar& g, int by) {
  // grchar(M(n)) = v^{-n} grchar(M): shift exponents down by n
  GradedChar out;
  for (const auto& [i, c] : g) out[i - by] = c;
  return out;
}

GradedChar truncate_char(const GradedChar& g, int bound) {
  GradedChar out;
  for (const auto& [i, c] : g)
    if (i <= bound && c != 0) out[i] = c;
  return out;
}

GradedChar mul_v_plus_vinv(const GradedChar& g) {
  GradedChar out;
  for (const auto& [i, c] : g) {
    out[i + 1] += c;
    out[i - 1] += c;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

} // namespace

BimodReport std_iso_check(const BimodRings& rings, const std::vector<int>& wk_word,
                          const std::vector<int>& x_word, int degree_bound) {
  BimodReport report;
  // w as a word in S (acting on R) and as a matrix on P
  std::vector<int> w_s_word;
  for (int k : wk_word) {
    const auto& gw = rings.spec().wk_words.at(k);
    w_s_word.insert(w_s_word.end(), gw.begin(), gw.end());
  }
  std::vector<int> winv_s_word(w_s_word.rbegin(), w_s_word.rend());
  auto w_p = rings.wk_word_matrix(wk_word);
  auto winv_p = mat_inverse(w_p);

  std::vector<MPoly> p_monos = ring_monomials(rings.n_p(), degree_bound);
  std::vector<MPoly> r_monos = ring_monomials(rings.n_r(), degree_bound);
  std::vector<MPoly> invariants = rings.invariant_spanning_set(degree_bound / 2);

  // w^{-1}(f p) = f w^{-1}(p) for invariant f
  for (const auto& f : invariants)
    for (const auto& p : p_monos) {
      MPoly lhs = rings.act_p_matrix(f * p, winv_p);
      MPoly rhs = f * rings.act_p_matrix(p, winv_p);
      if (lhs != rhs) {
        report.ok = false;
        report.witness = "left identity fails at f=" + f.to_string(rings.spec().p_gens) +
                         ", p=" + p.to_string(rings.spec().p_gens);
        return report;
      }
    }

  // w^{-1}(p phi(wx g)) = (w^{-1} p) phi(x g)
  std::vector<int> wx_word = w_s_word;
  wx_word.insert(wx_word.end(), x_word.begin(), x_word.end());
  for (const auto& p : p_monos)
    for (const auto& g : r_monos) {
      MPoly lhs = rings.act_p_matrix(p * rings.phi(rings.act_word(g, wx_word)), winv_p);
      MPoly rhs = rings.act_p_matrix(p, winv_p) * rings.phi(rings.act_word(g, x_word));
      if (lhs != rhs) {
        report.ok = false;
        report.witness = "right identity fails at p=" + p.to_string(rings.spec().p_gens) +
                         ", g=" + g.to_string(rings.spec().r_gens);
        return report;
      }
    }
  return report;
}

BimodReport tensor_Bs_check(const BimodTower& m, int s, int degree_bound) {
  BimodReport report;
  BimodTower t = m.tensor_Bs(s);
  const auto& rings = *m.rings();

  // graded character identity through degree_bound - 1 (the product needs one
  // degree of margin at the truncation edge)
  GradedChar lhs = truncate_char(t.grchar(degree_bound - 1), degree_bound - 1);
  GradedChar rhs = truncate_char(mul_v_plus_vinv(m.grchar(degree_bound)), degree_bound - 1);
  if (lhs != rhs) {
    report.ok = false;
    report.witness = "graded character identity (v+v^{-1}) fails";
    return report;
  }

  // right-action associativity and left/right commutation on the presentation
  std::vector<MPoly> r_monos = ring_monomials(rings.n_r(), degree_bound / 2);
  std::vector<MPoly> p_gens_polys;
  for (int i = 0; i < rings.n_p(); ++i) p_gens_polys.push_back(rings.p_var(i));
  for (int mask = 0; mask < t.rank(); ++mask) {
    BimodTower::Elem e = t.basis(mask);
    for (const auto& g : r_monos)
      for (const auto& h : r_monos) {
        auto lhs2 = t.right_act(t.right_act(e, g), h);
        auto rhs2 = t.right_act(e, g * h);
        if (!t.equal(lhs2, rhs2)) {
          report.ok = false;
          report.witness = "associativity fails at basis " + std::to_string(mask) + ", g=" +
                           g.to_string(rings.spec().r_gens) + ", h=" +
                           h.to_string(rings.spec().r_gens);
          return report;
        }
      }
    for (const auto& f : p_gens_polys)
      for (const auto& g : r_monos) {
        auto lhs2 = t.left_mul(f, t.right_act(e, g));
        auto rhs2 = t.right_act(t.left_mul(f, e), g);
        if (!t.equal(lhs2, rhs2)) {
          report.ok = false;
          report.witness = "left/right commutation fails at basis " + std::to_string(mask);
          return report;
        }
      }
  }
  return report;
}

BsSquaredReport decompose_Bs_squared(const std::shared_ptr<const BimodRings>& rings, int s,
                                     int degree_bound) {
  BsSquaredReport report;
  auto reg = rings->regular();
  BimodTower bs(reg, {}, {s});
  BimodTower bss(reg, {}, {s, s});

  // mask bit 0 is the middle slot of R (x) R (x) R; p1 projects it to R^s * 1
  auto p1 = [&](const BimodTower::Elem& e) {
    BimodTower::Elem out = e;
    for (int mask = 0; mask < bss.rank(); ++mask)
      if (mask & 1) out[mask] = MPoly(reg->n_p());
    return out;
  };
  auto p2 = [&](const BimodTower::Elem& e) {
    BimodTower::Elem out = e;
    for (int mask = 0; mask < bss.rank(); ++mask)
      if (!(mask & 1)) out[mask] = MPoly(reg->n_p());
    return out;
  };
  auto iota1 = [&](const BimodTower::Elem& y) { // B_s(1) -> im p1
    BimodTower::Elem out = bss.zero();
    out[0] = y[0];
    out[2] = y[1];
    return out;
  };
  auto iota2 = [&](const BimodTower::Elem& y) { // B_s(-1) -> im p2
    BimodTower::Elem out = bss.zero();
    out[1] = y[0];
    out[3] = y[1];
    return out;
  };

  // p1 + p2 = id and idempotency on the free basis
  for (int mask = 0; mask < bss.rank(); ++mask) {
    auto e = bss.basis(mask);
    if (!bss.equal(bss.add(p1(e), p2(e)), e) || !bss.equal(p1(p1(e)), p1(e)) ||
        !bss.equal(p2(p2(e)), p2(e)) || !bss.equal(p1(p2(e)), bss.zero())) {
      report.ok = false;
      report.witness = "idempotent identities fail on basis " + std::to_string(mask);
      return report;
    }
  }

  std::vector<MPoly> r_monos = ring_monomials(reg->n_r(), degree_bound / 2);
  for (int mask = 0; mask < bss.rank(); ++mask) {
    auto e = bss.basis(mask);
    for (const auto& g : r_monos) {
      auto eg = bss.right_act(e, g);
      if (!bss.equal(p1(eg), bss.right_act(p1(e), g)) ||
          !bss.equal(p2(eg), bss.right_act(p2(e), g))) {
        report.ok = false;
        report.witness = "projection is not a bimodule map at basis " + std::to_string(mask) +
                         ", g=" + g.to_string(reg->spec().r_gens);
        return report;
      }
    }
  }

  // the inclusions intertwine the right action and land in the right image
  for (int ymask = 0; ymask < bs.rank(); ++ymask) {
    auto y = bs.basis(ymask);
    for (const auto& g : r_monos) {
      auto y_g = bs.right_act(y, g);
      if (!bss.equal(iota1(y_g), bss.right_act(iota1(y), g)) ||
          !bss.equal(iota2(y_g), bss.right_act(iota2(y), g))) {
        report.ok = false;
        report.witness = "inclusion fails to intertwine at basis " + std::to_string(ymask) +
                         ", g=" + g.to_string(reg->spec().r_gens);
        return report;
      }
      if (!bss.equal(p1(iota1(y_g)), iota1(y_g)) || !bss.equal(p2(iota2(y_g)), iota2(y_g))) {
        report.ok = false;
        report.witness = "inclusion leaves its image at basis " + std::to_string(ymask);
        return report;
      }
    }
  }

  // shift match: im p1 ~ B_s(1), im p2 ~ B_s(-1) as graded characters
  GradedChar bs_char = bs.grchar(degree_bound + 1);
  GradedChar im1, im2;
  {
    GradedChar p_series = reg->series_p(degree_bound + bss.factors());
    for (int mask = 0; mask < bss.rank(); ++mask) {
      GradedChar& target = (mask & 1) ? im2 : im1;
      for (const auto& [d, c] : p_series) {
        int i = d + bss.basis_degree(mask);
        if (i <= degree_bound - 1) target[i] += c;
      }
    }
  }
  report.shift_match =
      truncate_char(im1, degree_bound - 1) ==
          truncate_char(shift_char(bs_char, 1), degree_bound - 1) &&
      truncate_char(im2, degree_bound - 1) ==
          truncate_char(shift_char(bs_char, -1), degree_bound - 1);
  if (!report.shift_match) {
    report.ok = false;
    report.witness = "image characters do not match B_s(+-1)";
  }
  return report;
}

std::vector<mpz_class> equivariant_poincare(const std::vector<int>& degrees_K,
                                            const std::vector<int>& degrees_G, int n_T,
                                            int bound) {
  // numerator: prod (1 - t^{2 d_G}); denominator: prod (1 - t^{2 d_K}) (1 - t^2)^{n_T}
  std::vector<mpz_class> num(bound + 1, 0), den(bound + 1, 0);
  num[0] = 1;
  den[0] = 1;
  auto mul_one_minus = [&](std::vector<mpz_class>& poly, int e) {
    if (e > bound) return;
    std::vector<mpz_class> out(bound + 1, 0);
    for (int i = 0; i <= bound; ++i) {
      if (poly[i] == 0) continue;
      out[i] += poly[i];
      if (i + e <= bound) out[i + e] -= poly[i];
    }
    poly = std::move(out);
  };
  for (int d : degrees_G) mul_one_minus(num, 2 * d);
  for (int d : degrees_K) mul_one_minus(den, 2 * d);
  for (int i = 0; i < n_T; ++i) mul_one_minus(den, 2);
  if (den[0] == 0) throw Error(Errc::bad_input, "series denominator has zero constant term");
  std::vector<mpz_class> out(bound + 1, 0);
  for (int i = 0; i <= bound; ++i) {
    mpz_class acc = num[i];
    for (int j = 1; j <= i; ++j) acc -= den[j] * out[i - j];
    if (acc % den[0] != 0)
      throw Error(Errc::bad_input, "series quotient is not integral at degree " +
                                       std::to_string(i));
    out[i] = acc / den[0];
    if (out[i] < 0)
      throw Error(Errc::bad_input,
                  "series quotient has a negative coefficient at degree " + std::to_string(i) +
                      "; the invariant degrees are inconsistent");
  }
  return out;
}

} // namespace klv
