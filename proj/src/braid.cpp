#include "iqg/braid.hpp"

#include <unordered_map>

namespace iqg::braid {

using alg::Kind;
using alg::KVec;
using scalars::CentralMonomial;
using scalars::CentralSum;
using scalars::Fp;
using scalars::RationalFunc;
using weyl::RootVec;

KVec act_on_k(const RootDatum& R, const Word& w, const KVec& k) {
  RootVec r(R.nodes(), 0);
  for (int j = 1; j <= R.rank(); ++j) r[j] = k.e[j];
  RootVec out = weyl::act_on_root(R, w, r);
  KVec res;
  for (int j = 1; j <= R.rank(); ++j) res.e[j] = static_cast<int16_t>(out[j] - out[0] * R.delta()[j]);
  return res;
}

CentralMonomial act_on_kk(const RootDatum& R, const Word& w, const CentralMonomial& m) {
  RootVec r(R.nodes(), 0);
  for (int j = 0; j < R.nodes(); ++j) r[j] = m.e[j];
  RootVec out = weyl::act_on_root(R, w, r);
  CentralMonomial res;
  for (int j = 0; j < R.nodes(); ++j) res.e[j] = static_cast<int16_t>(out[j]);
  return res;
}

namespace {

template <class F>
using El = Element<F>;

template <class F>
El<F> word_el(const RootDatum* R, const std::string& w, const CentralSum<F>& c) {
  return El<F>::monomial(R, alg::Monomial{w, {}}, c);
}

// T_l on a single generator letter.
template <class F>
El<F> lusztig_letter(const RootDatum* R, const Letter& l, char c) {
  Kind t = alg::kind(c);
  if (t == Kind::B) throw std::invalid_argument("lusztig_T acts on E/F letters only");
  int j = alg::node(c);
  if (l.is_pi) {
    int m = R->pi_perm(l.index)[j];
    return El<F>::gen(R, t == Kind::E ? alg::E(m) : alg::Fl(m));
  }
  int i = l.index;
  if (i == j) {
    if (t == Kind::E) return -(El<F>::gen(R, alg::Fl(i)) * alg::K<F>(R, i));
    return -(alg::K<F>(R, i, -1) * El<F>::gen(R, alg::E(i)));
  }
  int a = -R->a(j, i);
  int d = R->d(i);
  El<F> out(R);
  char x = t == Kind::E ? alg::E(i) : alg::Fl(i);
  for (int r = 0; r <= a; ++r) {
    int s = a - r;
    RationalFunc c = (scalars::qfactorial(r, d) * scalars::qfactorial(s, d)).inverse();
    if (r % 2) c = -c;
    if (t == Kind::E) {
      c = c.shifted(-d * r);
      out += word_el<F>(R, std::string(s, x) + static_cast<char>(alg::E(j)) + std::string(r, x), alg::coeff<F>(c));
    } else {
      c = c.shifted(d * r);
      out += word_el<F>(R, std::string(r, x) + static_cast<char>(alg::Fl(j)) + std::string(s, x), alg::coeff<F>(c));
    }
  }
  return out;
}

// QSP T_l(B_j) as a B-polynomial.
template <class F>
El<F> qsp_letter(const RootDatum* R, const Letter& l, int j) {
  if (l.is_pi) return El<F>::gen(R, alg::B(R->pi_perm(l.index)[j]));
  int i = l.index;
  char bi = alg::B(i), bj = alg::B(j);
  using C = CentralSum<F>;
  if (i == j) return El<F>::gen(R, bj, C::kk(j, -1));
  int a = R->a(j, i);
  int d = R->d(i);
  auto q = [&](int k) { return C::q_power(k); };
  auto w = [&](std::string s, const C& c) { return word_el<F>(R, s, c); };
  auto qi = [&](int n) { return alg::coeff<F>(scalars::qint(n, d)); };
  std::string I1(1, bi), J(1, bj);
  switch (a) {
    case 0:
      return El<F>::gen(R, bj);
    case -1:
      return w(J + I1, C(1)) - w(I1 + J, q(d));
    case -2: {
      C inv2 = alg::coeff<F>(scalars::qint(2, d).inverse());
      El<F> s = w(J + I1 + I1, C(1)) - w(I1 + J + I1, q(d) * qi(2)) + w(I1 + I1 + J, q(2 * d));
      return s.scaled(inv2) + El<F>::gen(R, bj, C::kk(i));
    }
    case -3: {
      C pre = alg::coeff<F>((scalars::qint(3, d) * scalars::qint(2, d)).inverse());
      El<F> br3 = w(J + I1, C(1)) - w(I1 + J, q(3 * d));  // [B_j, B_i]_{q_i^3}
      El<F> br1 = w(J + I1, C(1)) - w(I1 + J, q(d));
      // The q^2 in the third term is kept as printed.
      El<F> s = w(J + I1 + I1 + I1, C(1)) - w(I1 + J + I1 + I1, q(d) * qi(3)) + w(I1 + I1 + J + I1, q(2) * qi(3)) -
                w(I1 + I1 + I1 + J, q(3 * d)) + br3.scaled(q(-d) * C::kk(i));
      return s.scaled(pre) + br1.scaled(C::kk(i));
    }
  }
  throw std::invalid_argument("qsp_T: unsupported Cartan entry");
}

Word single(const Letter& l) { return Word{l}; }

template <class F>
alg::Hom<F> letter_hom(const RootDatum* R, const Word& w, std::function<El<F>(char)> letter, bool normalize) {
  alg::Hom<F> h;
  h.letter = std::move(letter);
  h.kpart = [R, w](const KVec& k) { return El<F>::kmon(R, act_on_k(*R, w, k)); };
  h.central = [R, w](const CentralMonomial& m) { return act_on_kk(*R, w, m); };
  if (normalize) h.step = [](const El<F>& x) { return uq::normal_form(x); };
  return h;
}

// Simple root index of u(alpha_j) if it is simple, else -1.
int simple_image(const RootDatum& R, const Word& u, int j) {
  RootVec r = weyl::act_on_root(R, u, R.simple(j));
  int idx = -1;
  for (int k = 0; k < R.nodes(); ++k) {
    if (r[k] == 0) continue;
    if (r[k] != 1 || idx >= 0) return -1;
    idx = k;
  }
  return idx;
}

void require_reduced(const RootDatum& R, const Word& w) {
  if (!weyl::is_reduced(R, w)) throw std::invalid_argument("braid word is not reduced: " + weyl::word_to_string(w));
}

// Images of B letters under T_{w[0..k)} for every prefix, memoized. With a `base` map the
// letters are sent into the target algebra first and products are kept in normal form.
template <class F>
class PrefixImages {
 public:
  PrefixImages(const RootDatum* R, const Word& w, std::function<El<F>(char)> base)
      : R_(R), w_(w), base_(std::move(base)), memo_(w.size() + 1) {}

  const El<F>& image(std::size_t k, char c) {
    auto it = memo_[k].find(c);
    if (it != memo_[k].end()) return it->second;
    El<F> val = compute(k, c);
    return memo_[k].emplace(c, std::move(val)).first->second;
  }

 private:
  El<F> leaf(char c) const { return base_ ? base_(c) : El<F>::gen(R_, c); }

  El<F> compute(std::size_t k, char c) {
    if (k == 0) return leaf(c);
    Word prefix(w_.begin(), w_.begin() + static_cast<long>(k));
    int m = simple_image(*R_, prefix, alg::node(c));
    if (m >= 0) return leaf(alg::B(m));
    El<F> y = qsp_letter<F>(R_, w_[k - 1], alg::node(c));
    Word shorter(w_.begin(), w_.begin() + static_cast<long>(k - 1));
    auto h = letter_hom<F>(R_, shorter, [this, k](char l) { return image(k - 1, l); }, static_cast<bool>(base_));
    h.kpart = nullptr;
    return alg::apply_hom(h, y);
  }

  const RootDatum* R_;
  Word w_;
  std::function<El<F>(char)> base_;
  std::vector<std::unordered_map<char, El<F>>> memo_;
};

// T_w on one E/F generator, peeling letters off the right so that every
// intermediate result is T_u(e) for a suffix u of w.
template <class F>
El<F> lusztig_generator(const RootDatum* R, const Word& w, char c) {
  El<F> x = El<F>::gen(R, c);
  for (std::size_t k = w.size(); k-- > 0;) {
    Word suffix(w.begin() + static_cast<long>(k), w.end());
    int m = simple_image(*R, suffix, alg::node(c));
    if (m >= 0) {
      x = El<F>::gen(R, alg::kind(c) == Kind::E ? alg::E(m) : alg::Fl(m));
      continue;
    }
    x = uq::normal_form(lusztig_T(w[k], x));
  }
  return x;
}

}  // namespace

template <class F>
Element<F> lusztig_T(const Letter& l, const Element<F>& x) {
  const RootDatum* R = x.datum();
  if (!R) return x;
  auto h = letter_hom<F>(R, single(l), [R, l](char c) { return lusztig_letter<F>(R, l, c); }, false);
  return alg::apply_hom(h, x);
}

template <class F>
Element<F> lusztig_T_word(const Word& w, const Element<F>& x) {
  const RootDatum* R = x.datum();
  if (!R || w.empty()) return x;
  require_reduced(*R, w);
  std::unordered_map<char, Element<F>> images;
  auto h = letter_hom<F>(R, w, [&](char c) {
    auto it = images.find(c);
    if (it == images.end()) it = images.emplace(c, lusztig_generator<F>(R, w, c)).first;
    return it->second;
  }, true);
  return uq::normal_form(alg::apply_hom(h, x));
}

template <class F>
Element<F> qsp_T(const Letter& l, const Element<F>& p) {
  const RootDatum* R = p.datum();
  if (!R) return p;
  auto h = letter_hom<F>(R, single(l), [R, l](char c) {
    if (alg::kind(c) != Kind::B) throw std::invalid_argument("qsp_T acts on B letters only");
    return qsp_letter<F>(R, l, alg::node(c));
  }, false);
  return alg::apply_hom(h, p);
}

template <class F>
Element<F> qsp_T_word(const Word& w, const Element<F>& p) {
  return qsp_T_word_image<F>(w, p, nullptr);
}

template <class F>
Element<F> qsp_T_word_image(const Word& w, const Element<F>& p, const std::function<Element<F>(char)>& base) {
  const RootDatum* R = p.datum();
  if (!R) return p;
  if (!w.empty()) require_reduced(*R, w);
  PrefixImages<F> imgs(R, w, base);
  auto h = letter_hom<F>(R, w, [&imgs, &w](char c) {
    if (alg::kind(c) != Kind::B) throw std::invalid_argument("qsp_T acts on B letters only");
    return imgs.image(w.size(), c);
  }, static_cast<bool>(base));
  h.kpart = nullptr;
  Element<F> out = alg::apply_hom(h, p);
  return base ? uq::normal_form(out) : out;
}

template <class F>
Element<F> qsp_T_word_naive(const Word& w, const Element<F>& p) {
  Element<F> x = p;
  for (auto it = w.rbegin(); it != w.rend(); ++it) x = qsp_T(*it, x);
  return x;
}

template Element<RationalFunc> lusztig_T(const Letter&, const Element<RationalFunc>&);
template Element<Fp> lusztig_T(const Letter&, const Element<Fp>&);
template Element<RationalFunc> lusztig_T_word(const Word&, const Element<RationalFunc>&);
template Element<Fp> lusztig_T_word(const Word&, const Element<Fp>&);
template Element<RationalFunc> qsp_T(const Letter&, const Element<RationalFunc>&);
template Element<Fp> qsp_T(const Letter&, const Element<Fp>&);
template Element<RationalFunc> qsp_T_word(const Word&, const Element<RationalFunc>&);
template Element<Fp> qsp_T_word(const Word&, const Element<Fp>&);
template Element<RationalFunc> qsp_T_word_image(const Word&, const Element<RationalFunc>&,
                                                const std::function<Element<RationalFunc>(char)>&);
template Element<Fp> qsp_T_word_image(const Word&, const Element<Fp>&, const std::function<Element<Fp>(char)>&);
template Element<RationalFunc> qsp_T_word_naive(const Word&, const Element<RationalFunc>&);
template Element<Fp> qsp_T_word_naive(const Word&, const Element<Fp>&);

}  // namespace iqg::braid
