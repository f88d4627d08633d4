#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "iqg/scalars.hpp"
#include "iqg/weyl.hpp"

namespace iqg::alg {

using scalars::CentralMonomial;
using scalars::CentralSum;
using scalars::Fp;
using scalars::RationalFunc;
using weyl::RootDatum;
using weyl::RootVec;

// One process-wide datum per (family, rank); elements compare data by pointer.
const RootDatum* datum(weyl::Family f, int n);

// Letters are single chars: E_i = i, F_i = 8 + i, B_i = 16 + i.
enum class Kind { E, F, B };
inline char E(int i) { return static_cast<char>(i); }
inline char Fl(int i) { return static_cast<char>(8 + i); }
inline char B(int i) { return static_cast<char>(16 + i); }
inline Kind kind(char c) { return c < 8 ? Kind::E : (c < 16 ? Kind::F : Kind::B); }
inline int node(char c) { return c & 7; }
std::string letter_name(char c);  // "E1", "F0", "B2"
std::string word_name(const std::string& w);

// Exponents of K_1..K_n (entry 0 unused; K_0 is stored as K_theta^{-1}).
struct KVec {
  std::array<int16_t, kMaxNodes> e{};
  bool is_zero() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }
  KVec operator+(const KVec& o) const {
    KVec r;
    for (int i = 0; i < kMaxNodes; ++i) r.e[i] = static_cast<int16_t>(e[i] + o.e[i]);
    return r;
  }
  KVec operator-() const {
    KVec r;
    for (int i = 0; i < kMaxNodes; ++i) r.e[i] = static_cast<int16_t>(-e[i]);
    return r;
  }
  bool operator==(const KVec& o) const { return e == o.e; }
  bool operator<(const KVec& o) const { return e < o.e; }
};

// K_i^power for i in I, with K_0 = K_theta^{-1}.
KVec k_node(const RootDatum& R, int i, int power = 1);
// (mu, alpha_j) for mu over I0 and j in I.
int pairing(const RootDatum& R, const KVec& mu, int j);
// (mu, deg w) where E_j has degree alpha_j and F_j degree -alpha_j; B letters pair to 0.
int pairing(const RootDatum& R, const KVec& mu, const std::string& w);

struct Monomial {
  std::string w;
  KVec k;
  bool operator==(const Monomial& o) const { return w == o.w && k == o.k; }
  // Canonical print order: length, then letters, then K-exponents.
  bool operator<(const Monomial& o) const {
    if (w.size() != o.w.size()) return w.size() < o.w.size();
    if (w != o.w) return w < o.w;
    return k < o.k;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = std::hash<std::string>()(m.w);
    for (auto x : m.k.e) h = scalars::hash_mix(h, static_cast<std::size_t>(static_cast<uint16_t>(x)));
    return h;
  }
};

// Finite-root-lattice degree (vector over I with entry 0 = 0); E_0 has degree -theta.
RootVec letter_degree(const RootDatum& R, char c);
RootVec word_degree(const RootDatum& R, const std::string& w);

template <class F>
class Element {
 public:
  using Coeff = CentralSum<F>;
  using Term = std::pair<Monomial, Coeff>;
  using TermMap = std::unordered_map<Monomial, Coeff, MonomialHash>;

  Element() = default;
  explicit Element(const RootDatum* R) : R_(R) {}
  Element(const RootDatum* R, const Coeff& c) : R_(R) {
    if (!c.is_zero()) terms_.emplace_back(Monomial{}, c);
  }
  static Element gen(const RootDatum* R, char letter, const Coeff& c = Coeff(1)) {
    Element x(R);
    if (!c.is_zero()) x.terms_.emplace_back(Monomial{std::string(1, letter), {}}, c);
    return x;
  }
  static Element kmon(const RootDatum* R, const KVec& k, const Coeff& c = Coeff(1)) {
    Element x(R);
    if (!c.is_zero()) x.terms_.emplace_back(Monomial{{}, k}, c);
    return x;
  }
  static Element monomial(const RootDatum* R, const Monomial& m, const Coeff& c) {
    Element x(R);
    if (!c.is_zero()) x.terms_.emplace_back(m, c);
    return x;
  }
  static Element from_map(const RootDatum* R, TermMap&& m) {
    Element x(R);
    x.terms_.reserve(m.size());
    for (auto& [mono, c] : m)
      if (!c.is_zero()) x.terms_.emplace_back(mono, std::move(c));
    std::sort(x.terms_.begin(), x.terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    return x;
  }
  static void accumulate(TermMap& m, const Monomial& mono, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m.try_emplace(mono, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) m.erase(it);
    }
  }
  template <class G = F, class = std::enable_if_t<!std::is_same_v<G, RationalFunc>>>
  static Element from_exact(const Element<RationalFunc>& x) {
    TermMap m;
    for (const auto& [mono, c] : x.terms()) accumulate(m, mono, Coeff::from_exact(c));
    return from_map(x.datum(), std::move(m));
  }

  const RootDatum* datum() const { return R_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Coefficient of the empty word with K = 1, or zero.
  Coeff constant_term() const {
    if (!terms_.empty() && terms_[0].first.w.empty() && terms_[0].first.k.is_zero()) return terms_[0].second;
    return {};
  }
  bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && !constant_term().is_zero()); }

  Element operator-() const {
    Element x = *this;
    for (auto& t : x.terms_) t.second = -t.second;
    return x;
  }
  Element& operator+=(const Element& o) {
    R_ = pick(R_, o.R_);
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t a = 0, b = 0;
    while (a < terms_.size() || b < o.terms_.size()) {
      if (b == o.terms_.size() || (a < terms_.size() && terms_[a].first < o.terms_[b].first)) {
        out.push_back(std::move(terms_[a++]));
      } else if (a == terms_.size() || o.terms_[b].first < terms_[a].first) {
        out.push_back(o.terms_[b++]);
      } else {
        Coeff c = terms_[a].second + o.terms_[b].second;
        if (!c.is_zero()) out.emplace_back(std::move(terms_[a].first), std::move(c));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
    return *this;
  }
  Element& operator-=(const Element& o) { return *this += -o; }
  Element operator+(const Element& o) const { Element x = *this; x += o; return x; }
  Element operator-(const Element& o) const { Element x = *this; x -= o; return x; }

  Element operator*(const Element& o) const {
    const RootDatum* R = pick(R_, o.R_);
    Element x(R);
    if (terms_.empty() || o.terms_.empty()) return x;
    TermMap m;
    m.reserve(terms_.size() * o.terms_.size());
    for (const auto& [ma, ca] : terms_) {
      bool kzero = ma.k.is_zero();
      for (const auto& [mb, cb] : o.terms_) {
        Monomial mono{ma.w + mb.w, ma.k + mb.k};
        Coeff c = ca * cb;
        if (!kzero && !mb.w.empty()) {
          int e = pairing(*R, ma.k, mb.w);
          if (e) c = c.scaled(F::q_power(e));
        }
        accumulate(m, mono, c);
      }
    }
    return from_map(R, std::move(m));
  }
  Element& operator*=(const Element& o) { return *this = *this * o; }
  Element scaled(const Coeff& c) const {
    if (c.is_zero()) return Element(R_);
    Element x = *this;
    if (c.is_one()) return x;
    std::vector<Term> out;
    for (auto& t : x.terms_) {
      Coeff v = t.second * c;
      if (!v.is_zero()) out.emplace_back(std::move(t.first), std::move(v));
    }
    x.terms_ = std::move(out);
    return x;
  }

  bool operator==(const Element& o) const { return terms_ == o.terms_; }
  bool operator!=(const Element& o) const { return !(*this == o); }

  std::size_t hash() const {
    std::size_t h = terms_.size();
    for (const auto& [m, c] : terms_) h = scalars::hash_mix(scalars::hash_mix(h, MonomialHash()(m)), c.hash());
    return h;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "[" + c.to_string() + "]";
      if (!m.w.empty()) s += " " + word_name(m.w);
      for (int i = 1; i < kMaxNodes; ++i)
        if (m.k.e[i]) s += " K" + std::to_string(i) + "^" + std::to_string(m.k.e[i]);
    }
    return s;
  }

  static const RootDatum* pick(const RootDatum* a, const RootDatum* b) {
    if (a && b && a != b) throw std::invalid_argument("root datum mismatch");
    return a ? a : b;
  }

 private:
  const RootDatum* R_ = nullptr;
  std::vector<Term> terms_;  // sorted by Monomial, no zero coefficients
};

using AlgElement = Element<RationalFunc>;
using AlgElementP = Element<Fp>;

// Coefficient helpers in field F.
template <class F>
CentralSum<F> coeff(const RationalFunc& r) {
  return CentralSum<F>(scalars::field_from<F>(r));
}
template <class F>
CentralSum<F> qpow(int k) {
  return CentralSum<F>::q_power(k);
}

template <class F>
Element<F> one(const RootDatum* R) {
  return Element<F>(R, CentralSum<F>(1));
}
template <class F>
Element<F> K(const RootDatum* R, int i, int power = 1) {
  return Element<F>::kmon(R, k_node(*R, i, power));
}
template <class F>
Element<F> KK(const RootDatum* R, int i, int power = 1) {
  return Element<F>(R, CentralSum<F>::kk(i, power));
}

// [a, b]_v = ab - v ba.
template <class F>
Element<F> qcomm(const Element<F>& a, const Element<F>& b, const CentralSum<F>& v) {
  return a * b - (b * a).scaled(v);
}
template <class F>
Element<F> qcomm(const Element<F>& a, const Element<F>& b, int qexp) {
  return qcomm(a, b, qpow<F>(qexp));
}

template <class F>
Element<F> power(const Element<F>& x, int r) {
  if (r < 0) throw std::invalid_argument("negative power");
  Element<F> out = one<F>(x.datum());
  for (int k = 0; k < r; ++k) out = out * x;
  return out;
}

// x^r / [r]_{q_i}! where d is the symmetrizer of the letter's node.
template <class F>
Element<F> divided_power(const Element<F>& x, int r, int d) {
  return power(x, r).scaled(coeff<F>(scalars::qfactorial(r, d).inverse()));
}
// Divided power of a single E/F/B letter; its node sets q_i.
template <class F>
Element<F> divided_power(const RootDatum* R, char letter, int r) {
  return divided_power(Element<F>::gen(R, letter), r, R->d(node(letter)));
}

// Q-homogeneous components of x (E/F words only).
template <class F>
std::map<RootVec, Element<F>> degree_split(const Element<F>& x) {
  std::map<RootVec, typename Element<F>::TermMap> parts;
  for (const auto& [m, c] : x.terms()) Element<F>::accumulate(parts[word_degree(*x.datum(), m.w)], m, c);
  std::map<RootVec, Element<F>> out;
  for (auto& [d, m] : parts) out.emplace(d, Element<F>::from_map(x.datum(), std::move(m)));
  return out;
}

// Algebra homomorphism defined on letters, K-monomials and central monomials.
// `step` is applied after every multiplication so callers can keep intermediate
// results in a normal form.
template <class F>
struct Hom {
  std::function<Element<F>(char)> letter;
  std::function<Element<F>(const KVec&)> kpart;  // may be empty: K fixed
  std::function<CentralMonomial(const CentralMonomial&)> central;  // may be empty: identity
  std::function<Element<F>(const Element<F>&)> step;  // may be empty
};

template <class F>
Element<F> apply_hom(const Hom<F>& h, const Element<F>& x, const RootDatum* target = nullptr) {
  const RootDatum* R = target ? target : x.datum();
  std::unordered_map<char, Element<F>> images;
  auto image = [&](char c) -> const Element<F>& {
    auto it = images.find(c);
    if (it == images.end()) it = images.emplace(c, h.letter(c)).first;
    return it->second;
  };
  Element<F> out(R);
  for (const auto& [m, c] : x.terms()) {
    typename Element<F>::Coeff cc = h.central ? c.map_central(h.central) : c;
    Element<F> acc(R, cc);
    for (char l : m.w) {
      acc = acc * image(l);
      if (h.step) acc = h.step(acc);
      if (acc.is_zero()) break;
    }
    if (!m.k.is_zero() && !acc.is_zero()) {
      acc = acc * (h.kpart ? h.kpart(m.k) : Element<F>::kmon(R, m.k));
      if (h.step) acc = h.step(acc);
    }
    out += acc;
  }
  return out;
}

// tE_j = -q_j^{-2} KK_j E_j K_j^{-1}.
template <class F>
Element<F> tE(const RootDatum* R, int j) {
  CentralSum<F> c = -(CentralSum<F>::kk(j) * qpow<F>(-2 * R->d(j)));
  return Element<F>::monomial(R, Monomial{std::string(1, E(j)), k_node(*R, j, -1)}, c);
}

// Replaces the B letters of a B-polynomial: occurrence `pos` of monomial `w`
// becomes tE_j when choose(w, pos) is true and F_j otherwise.
template <class F>
Element<F> substitute_B(const Element<F>& p, const std::function<bool(const std::string&, std::size_t)>& choose) {
  const RootDatum* R = p.datum();
  Element<F> out(R);
  for (const auto& [m, c] : p.terms()) {
    Element<F> acc(R, c);
    for (std::size_t pos = 0; pos < m.w.size(); ++pos) {
      char l = m.w[pos];
      if (kind(l) != Kind::B) {
        acc = acc * Element<F>::gen(R, l);
        continue;
      }
      acc = acc * (choose(m.w, pos) ? tE<F>(R, node(l)) : Element<F>::gen(R, Fl(node(l))));
    }
    out += acc * Element<F>::kmon(R, m.k);
  }
  return out;
}

// Prefix S-expression text form (exact coefficients). `parse` accepts the
// printed form plus convenience operators; see docs in the README.
std::string to_sexpr(const AlgElement& x);
AlgElement parse_sexpr(const RootDatum* R, const std::string& text);
std::string scalar_sexpr(const scalars::Scalar& s);

}  // namespace iqg::alg
