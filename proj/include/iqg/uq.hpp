#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "iqg/freealg.hpp"

namespace iqg::uq {

using alg::Element;
using alg::KVec;
using alg::Monomial;
using weyl::RootDatum;
using weyl::RootVec;

class DegreeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Maximal E-length and F-length of a triangular word that normal_form accepts.
int degree_cap();
void set_degree_cap(int cap);

// Rewrites every word as (F-word)(E-word)K using E_iF_j = F_jE_i + delta_ij (K_i - K_i^{-1})/(q_i - q_i^{-1}).
template <class F>
Element<F> triangular_form(const Element<F>& x);

// Triangular form with the F- and E-parts reduced modulo the Serre ideal to a
// fixed complement basis. Canonical: x = y in the algebra iff normal_form(x) == normal_form(y).
template <class F>
Element<F> normal_form(const Element<F>& x);

template <class F>
bool is_zero(const Element<F>& x) {
  return normal_form(x).is_zero();
}
template <class F>
bool equal_mod_relations(const Element<F>& a, const Element<F>& b) {
  return is_zero(a - b);
}

// sum_r (-1)^r [1-a_ji choose r]_{q_i} x^{1-a_ji-r} y x^r with x = e_i, y = e_j of the given kind.
template <class F>
Element<F> serre_poly(const RootDatum* R, int i, int j, alg::Kind sign);

// Words of a free graded piece of the positive part modulo the Serre ideal:
// dimension of the quotient in E-letter counts m (over I).
int serre_quotient_dimension(const RootDatum* R, const std::vector<int>& counts);

struct Positivity {
  enum Mode { Plus, DiAtLeast, NotI } mode = Plus;
  int i = 0;
  int r = 0;
  static Positivity plus() { return {}; }
  static Positivity d_at_least(int i, int r) { return {DiAtLeast, i, r}; }
  static Positivity neq(int i) { return {NotI, i, 0}; }
  std::string to_string() const;
};

bool degree_satisfies(const RootDatum& R, const RootVec& deg, const Positivity& mode);

// Q-graded components of normal_form(x), nonzero only.
template <class F>
std::map<RootVec, Element<F>> graded_components(const Element<F>& x) {
  return alg::degree_split(normal_form(x));
}

template <class F>
bool in_positive_subalgebra(const Element<F>& x, const Positivity& mode) {
  Element<F> nf = normal_form(x);
  for (const auto& [m, c] : nf.terms())
    if (!degree_satisfies(*nf.datum(), alg::word_degree(*nf.datum(), m.w), mode)) return false;
  return true;
}

// Drops cached graded pieces (for tests and memory control).
void clear_caches();

}  // namespace iqg::uq
