#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ssp/rational.hpp"

namespace ssp {

enum class Family { B, D };
enum class SigmaChoice { identity, swap_last_pair };

// Signed permutation of coordinates: img[i] = +-(j+1) means e_{i+1} maps to
// sign * e_j.  Type D restricts to an even number of sign flips; products of
// the generators below never leave that subgroup.
struct SignedPerm {
  std::vector<int> img;

  static SignedPerm identity(int m);
  SignedPerm compose(const SignedPerm& other) const;  // this after other
  SignedPerm inverse() const;
  int flips() const;

  template <typename T>
  std::vector<T> apply(const std::vector<T>& x) const {
    std::vector<T> y(x.size(), T(0));
    for (size_t j = 0; j < x.size(); ++j) {
      int code = img[j];
      int target = code > 0 ? code - 1 : -code - 1;
      y[target] = code > 0 ? x[j] : -x[j];
    }
    return y;
  }

  auto operator<=>(const SignedPerm&) const = default;
};

// Element of the extended affine Weyl group Z^m x| W_0, acting on affine
// space by x |-> fin(x) + trans.  The length-zero component is the parity of
// the translation coordinate sum (trivial on the affine Weyl group, tau on
// the other coset).
struct WeylElement {
  std::vector<long> trans;
  SignedPerm fin;

  auto operator<=>(const WeylElement&) const = default;
};

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);
WeylElement weyl_inverse(const WeylElement& a);

// Affine Dynkin datum of type B~_m or D~_m with the diagram Frobenius, the
// minuscule coweight omega_1 = e_1, its length-zero companion tau, and a
// sigma-stable parahoric subset K (default: everything except node 0, the
// hyperspecial case).  Node labels follow the tables: 0 and 1 fork into 2
// for m >= 3; the B~_2 and D~_3 degenerations come out of the root data.
class CoxeterDatum {
 public:
  static CoxeterDatum build(Family family, int m, SigmaChoice sigma,
                            std::optional<std::set<int>> K = std::nullopt);

  Family family() const { return family_; }
  int m() const { return m_; }
  SigmaChoice sigma() const { return sigma_; }
  const std::set<int>& K() const { return K_; }
  int node_count() const { return m_ + 1; }

  const WeylElement& simple(int node) const;
  const WeylElement& tau() const { return tau_; }
  WeylElement identity_element() const;
  WeylElement translation(const std::vector<long>& v) const;
  const std::vector<std::vector<int>>& positive_roots() const { return pos_roots_; }

  // Iwahori-Matsumoto length; throws on elements of the wrong rank or, for
  // type D, an odd number of sign flips.
  long length(const WeylElement& x) const;
  int omega_component(const WeylElement& x) const;  // 0 or 1

  // Reduced word of the affine-Weyl part (component stripped from the
  // right); greedy smallest left descent, so the word is canonical.
  std::vector<int> reduced_word(const WeylElement& x) const;

  // Bruhat order: equal omega components and the subword criterion on the
  // affine parts.
  bool bruhat_leq(const WeylElement& a, const WeylElement& b) const;

  // Admissible set of the minuscule coweight: everything below a translation
  // by a W_0-conjugate of e_1.
  const std::vector<WeylElement>& adm_set() const { return adm_; }

  bool is_min_rep(const WeylElement& x) const;  // no left descent in K
  std::vector<WeylElement> min_reps() const;    // minimal reps within adm
  std::vector<WeylElement> eo_set() const;      // adm and minimal rep

  std::set<int> support(const WeylElement& x) const;
  std::set<int> sigma_support(const WeylElement& x) const;
  bool is_sigma_coxeter(const WeylElement& x) const;
  std::vector<WeylElement> eo_cox_set() const;

  // Diagram data.
  int coxeter_m(int i, int j) const;
  const std::vector<int>& tau_nodes() const { return tau_nodes_; }
  const std::vector<int>& sigma_nodes() const { return sigma_nodes_; }
  std::vector<int> tau_sigma_nodes() const;

  // Nonempty tau*sigma-stable node sets equidistant from the unique node
  // outside K (literal reading; requires |S - K| = 1).
  std::vector<std::set<int>> j_set() const;

  // Stratum table for this family/sigma variant: (label, word) rows.  In the
  // D nonsplit variant the printed rows double-book the label {m-1}; the
  // two explicitly printed maximal rows win in table_w_sigma, the full row
  // list keeps everything.
  struct TableRow {
    std::set<int> label;
    std::vector<int> word;  // letters of w; the element is word * tau
  };
  std::vector<TableRow> table_rows() const;
  WeylElement table_w_sigma(const std::set<int>& label) const;
  int t_sigma(const std::set<int>& label) const;  // 2 (l(w) + 1)

  // Evaluate a word in the simple reflections, optionally times tau.
  WeylElement eval_word(const std::vector<int>& word, bool times_tau) const;

  // Affine action on rational points, for geometric cross-checks.
  std::vector<Rat> apply_affine(const WeylElement& x, const std::vector<Rat>& pt) const;

 private:
  CoxeterDatum() = default;
  void check_element(const WeylElement& x) const;
  bool root_positive(const std::vector<long>& root) const;

  Family family_;
  int m_;
  SigmaChoice sigma_;
  std::set<int> K_;
  std::vector<WeylElement> simples_;  // s_0 .. s_m
  WeylElement tau_;
  std::vector<std::vector<int>> pos_roots_;
  std::vector<std::vector<int>> cox_m_;  // Coxeter matrix of the affine diagram
  std::vector<int> tau_nodes_;
  std::vector<int> sigma_nodes_;
  std::vector<WeylElement> adm_;
};

// Deterministic display order: by (length, word, component).
std::vector<WeylElement> sorted_by_length_word(const CoxeterDatum& datum,
                                               std::vector<WeylElement> elems);

}  // namespace ssp
