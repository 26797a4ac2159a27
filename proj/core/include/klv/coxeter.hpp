#ifndef KLV_COXETER_HPP
#define KLV_COXETER_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "klv/laurent.hpp"

namespace klv {

class CoxeterSystem;
using CoxeterPtr = std::shared_ptr<const CoxeterSystem>;

/// Element of a Coxeter group, stored as its action on the root lattice in
/// simple-root coordinates (an integer matrix). Two elements compare equal
/// iff they are equal in W; length and descents are read off the matrix.
class GroupElt {
public:
  GroupElt() = default;

  const CoxeterPtr& system() const { return sys_; }
  bool is_identity() const;

  GroupElt operator*(const GroupElt& o) const;
  bool operator==(const GroupElt& o) const { return mat_ == o.mat_; }
  bool operator!=(const GroupElt& o) const { return !(*this == o); }
  bool operator<(const GroupElt& o) const { return mat_ < o.mat_; }

  /// xs < x in length.
  bool is_right_descent(int s) const;
  bool is_left_descent(int s) const;
  int length() const;
  GroupElt inverse() const;
  /// ShortLex-minimal reduced word (generator indices).
  std::vector<int> reduced_word() const;
  /// Image of a root-lattice vector (simple-root coordinates).
  std::vector<long long> act_on_root(const std::vector<long long>& coords) const;

private:
  friend class CoxeterSystem;
  GroupElt(CoxeterPtr sys, std::vector<long long> mat)
      : sys_(std::move(sys)), mat_(std::move(mat)) {}
  long long at(int i, int j) const;

  CoxeterPtr sys_;
  std::vector<long long> mat_; // n*n row-major; column j = coordinates of w(alpha_j)
};

/// Diagram automorphism of S with theta^2 = id, preserving the Coxeter matrix.
struct Involution {
  std::vector<int> perm;

  bool is_identity() const;
  static Involution identity(int rank);
};

/// Generators of a subgroup W_K, given as words in S.
struct SubgroupSpec {
  std::vector<std::vector<int>> generator_words;
};

/// A Coxeter system with, for crystallographic types, an exact integer
/// reflection representation. Immutable after construction; all queries are
/// read-only and thread-safe.
class CoxeterSystem : public std::enable_shared_from_this<CoxeterSystem> {
public:
  /// Cartan-type label: "A1", "A2", ..., "B3", "D4", "E6", "F4", "G2".
  static CoxeterPtr make(const std::string& cartan_type);
  /// General Coxeter matrix; entries >= 2, diagonal 1, 0 marks infinity.
  static CoxeterPtr make_from_matrix(const std::vector<std::vector<int>>& m);

  int rank() const { return rank_; }
  int coxeter_m(int s, int t) const { return coxmat_[s * rank_ + t]; }
  const std::optional<std::string>& label() const { return label_; }

  /// True when the group is a finite Weyl group (crystallographic, finite type).
  bool is_finite_weyl() const { return finite_order_.has_value(); }
  unsigned long long order() const; // throws for infinite / unclassified groups

  GroupElt identity() const;
  GroupElt generator(int s) const;
  GroupElt from_word(const std::vector<int>& word) const;

  bool same_as(const CoxeterSystem& o) const;

private:
  CoxeterSystem() = default;
  void build_from_coxeter_matrix();
  void classify();

  int rank_ = 0;
  std::vector<int> coxmat_;          // m_st, 1 on the diagonal, 0 = infinity
  std::vector<long long> cartan_;    // empty when not crystallographic
  std::optional<std::string> label_;
  std::optional<unsigned long long> finite_order_;
};

/// Applies a diagram automorphism to a group element.
GroupElt theta_apply(const Involution& theta, const GroupElt& x);
void validate_involution(const CoxeterSystem& sys, const Involution& theta);

bool bruhat_leq(const GroupElt& x, const GroupElt& y);
std::set<GroupElt> lower_interval(const GroupElt& x);

std::vector<GroupElt> enumerate(const CoxeterPtr& sys);
/// W^theta = {w : theta(w) = w}, sorted by (length, ShortLex word).
std::vector<GroupElt> theta_fixed(const CoxeterPtr& sys, const Involution& theta);
/// One ShortLex-minimal representative per right coset W_K w inside W^theta.
std::vector<GroupElt> coset_reps(const CoxeterPtr& sys, const Involution& theta,
                                 const SubgroupSpec& wk);
/// Closure of the subgroup generated by the given words.
std::vector<GroupElt> subgroup_closure(const CoxeterPtr& sys, const SubgroupSpec& spec,
                                       std::size_t cap = 1u << 20);

/// p_I = sum over W_I of q^{l(y)}, rendered via q = v^{-2}.
LaurentV parabolic_poincare(const CoxeterPtr& sys, const std::set<int>& I);
GroupElt longest_parabolic(const CoxeterPtr& sys, const std::set<int>& I);

struct RootReflection {
  std::vector<long long> root; // positive root in simple-root coordinates
  GroupElt refl;
};
/// One entry per positive root of a finite Weyl group.
std::vector<RootReflection> positive_root_reflections(const CoxeterPtr& sys);
/// {y : y < w, l(y) = l(w) - 1} computed through reflections.
std::vector<GroupElt> bruhat_lower_covers(const GroupElt& w,
                                          const std::vector<RootReflection>& reflections);

std::set<int> right_descents(const GroupElt& x);
std::set<int> left_descents(const GroupElt& x);

/// Deterministic output order: length, then ShortLex word.
bool output_less(const GroupElt& a, const GroupElt& b);

/// "e" or dot-separated generator indices of the ShortLex word, e.g. "0.1.0".
std::string word_string(const GroupElt& x);
std::vector<int> parse_word_string(const std::string& text);

} // namespace klv

#endif
