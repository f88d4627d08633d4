#pragma once

#include <map>
#include <optional>

#include "iqg/braid.hpp"

namespace iqg::iq {

using alg::Element;
using weyl::RootDatum;

// B_i -> F_i + tE_i with tE_i = -q_i^{-2} KK_i E_i K_i^{-1}; E, F, K, KK are fixed.
template <class F>
Element<F> eta(const Element<F>& p);

// Left minus right side of the defining relation of the iquantum group for the pair (i, j).
template <class F>
Element<F> iquantum_relation(const RootDatum* R, int i, int j);

// Iterated brackets with parameter c:
//   P_1(y) = y,  P_{k+1}(y_1..y_{k+1}) = P_k(y_1..y_{k-1}, [y_k, y_{k+1}]_c),
//   P'_1(y) = y, P'_{k+1}(y_1..y_{k+1}) = [P'_k(y_1..y_k), y_{k+1}]_c.
template <class F>
Element<F> P(const std::vector<Element<F>>& y, const scalars::CentralSum<F>& c);
template <class F>
Element<F> Pprime(const std::vector<Element<F>>& y, const scalars::CentralSum<F>& c);

// sum_r (-q_i)^r b^{(2-r)} a b^{(r)}, divided powers taken at node i.
template <class F>
Element<F> hatP(const RootDatum* R, int i, const Element<F>& a, const Element<F>& b);
// hatP + KK_i a.
template <class F>
Element<F> boldP(const RootDatum* R, int i, const Element<F>& a, const Element<F>& b);

// Nested bracket expression over the leaves B_0..B_n, kept symbolic so it can be printed
// and evaluated with B, F or tE substituted uniformly.
struct Expr {
  enum class Op { Leaf, P, Pprime, BoldP, HatP, Bracket };
  Op op = Op::Leaf;
  int node = 0;   // leaf node, or the node of a bold/hat P
  int qexp = 1;   // bracket parameter q^qexp for P, P', Bracket
  std::vector<Expr> args;

  static Expr leaf(int j);
  static Expr p(int qexp, std::vector<Expr> args);
  static Expr bold(int i, Expr a, Expr b);
  static Expr hat(int i, Expr a, Expr b);
  static Expr bracket(int qexp, Expr a, Expr b);
  std::string to_string() const;
  int letters() const;
};

template <class F>
Element<F> evaluate(const RootDatum* R, const Expr& e, const std::function<Element<F>(int)>& leaf);

enum class Subst { B, F, tE };
template <class F>
Element<F> evaluate(const RootDatum* R, const Expr& e, Subst s);

// Closed nested form of T_{omega'_i}(B_i). Type A uses the chain form
// P_i(B_{i-1}, ..., B_1, P_{n-i+1}(B_{i+1}, ..., B_n, B_0)).
Expr omega_prime_expr(const RootDatum& R, int i);
template <class F>
Element<F> omega_prime_polynomial(const RootDatum* R, int i);

// Subterm types: for each node j the pair (d_j^+, d_j^-) counting tE_j and F_j letters.
using SubtermType = std::vector<std::pair<int, int>>;
std::string type_to_string(const SubtermType& t);
bool is_mixed(const SubtermType& t);

// eta(p) split by substitution type. Each group is brought to triangular form; groups that
// cancel already in the free algebra are dropped.
template <class F>
std::map<SubtermType, Element<F>> subterm_decompose(const Element<F>& p);

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct GoodPolyReport {
  int i = 0;
  std::size_t subterms = 0;
  Verdict mixed_vanish;   // mixed subterms with d_0^+ > 0 are zero
  Verdict degree_bound;   // sum_j (d_j^+ + d_j^-) alpha_j <= theta - alpha_i
  Verdict p_plus;         // P_+ equals the uniform tE substitution
  Verdict p_minus_minus;  // P_-- equals the uniform F substitution
  std::optional<Verdict> braid_plus, braid_minus;  // against T_{omega'_i}(tE_i), T_{omega'_i}(F_i)
  bool pass() const;
  bool good() const { return mixed_vanish.pass; }
};

// Throws std::invalid_argument if some subterm violates d_0^+ + d_0^- = 1.
template <class F>
GoodPolyReport check_i_good(const Element<F>& p, int i, bool cross_check_braid = false);

// Inverse of eta on its image: the B-polynomial whose words are normal-form F-words,
// peeled off level by level from the E-free, K-free part of maximal F-length.
// Throws std::invalid_argument if z is not in the image.
template <class F>
Element<F> lift_to_B(const Element<F>& z);

// Canonical form of a B-polynomial modulo the iquantum relations.
template <class F>
Element<F> reduce_B(const Element<F>& p);

template <class F>
struct QspImage {
  Element<F> poly;   // canonical B-polynomial
  Element<F> image;  // its image under eta, in normal form
};

// T_w(p) for a reduced word, applying one letter at a time from the right and reducing
// after every step, with the shortcut T_u(B_j) = B_{u(j)} whenever u(alpha_j) is simple.
template <class F>
QspImage<F> qsp_T_word_reduced(const weyl::Word& w, const Element<F>& p);

// eta(T_{omega'_i}(B_i)) along the fundamental-weight word.
template <class F>
Element<F> eta_of_qsp_image(const RootDatum* R, int i);

struct CompatReport {
  bool pass = false;
  std::size_t difference_terms = 0;
  std::string detail;
};

// eta(T_{omega'_i}(B_i)) == T_{omega'_i}(eta(B_i)) modulo the d_i >= 1 positive subalgebra.
template <class F>
CompatReport weak_compat_check(const RootDatum* R, int i);

// Q_i = C_i (P_- - P_--) with C_i = C^{-1} KK_i and C = KK_delta. Throws if p is not i-good.
template <class F>
Element<F> extract_Qi(const Element<F>& p, int i);

struct IdentityResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Type D identities used for the factorization argument (n >= 4).
template <class F>
std::vector<IdentityResult> verify_type_d_identities(const RootDatum* R);

}  // namespace iqg::iq
