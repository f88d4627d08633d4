#pragma once

#include "iqg/uq.hpp"

namespace iqg::braid {

using alg::Element;
using weyl::Letter;
using weyl::RootDatum;
using weyl::Word;

// Image of a K-exponent vector (over I0, K_0 = K_theta^{-1}) under the Weyl-group part of w.
alg::KVec act_on_k(const RootDatum& R, const Word& w, const alg::KVec& k);
// Image of a central monomial (exponents over I) under w.
scalars::CentralMonomial act_on_kk(const RootDatum& R, const Word& w, const scalars::CentralMonomial& m);

// Lusztig's automorphism for one letter (simple reflection or diagram automorphism),
// applied generator by generator. The result is not reduced modulo relations.
template <class F>
Element<F> lusztig_T(const Letter& l, const Element<F>& x);

// T_w = T_lambda T_{i_1} ... T_{i_r} for a reduced word. Generator images are built by
// peeling letters off the right, with the shortcut T_u(e_j) = e_{u(j)} whenever u(alpha_j)
// is simple for a suffix u; every intermediate result is brought to uq::normal_form.
template <class F>
Element<F> lusztig_T_word(const Word& w, const Element<F>& x);

// QSP braid operator for one letter on a B-polynomial, multiplied out formally.
template <class F>
Element<F> qsp_T(const Letter& l, const Element<F>& p);

// Formal composition along a reduced word, with the shortcut T_u(B_j) = B_{u(j)}.
template <class F>
Element<F> qsp_T_word(const Word& w, const Element<F>& p);

// Same, but each B letter is first sent through `base` (typically the embedding into
// the Drinfeld double) and all products are reduced with uq::normal_form. Prefix images
// are built by peeling letters off the right of w. A null `base` gives qsp_T_word.
template <class F>
Element<F> qsp_T_word_image(const Word& w, const Element<F>& p, const std::function<Element<F>(char)>& base);

// Letter-by-letter formal composition without shortcuts (reference implementation).
template <class F>
Element<F> qsp_T_word_naive(const Word& w, const Element<F>& p);

}  // namespace iqg::braid
