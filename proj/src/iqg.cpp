#include "iqg/iqg.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace iqg::iq {

using alg::Kind;
using scalars::CentralSum;
using scalars::Fp;
using scalars::RationalFunc;
using weyl::RootVec;

namespace {

template <class F>
Element<F> gen(const RootDatum* R, char c) {
  return Element<F>::gen(R, c);
}

template <class F>
Element<F> eta_letter(const RootDatum* R, char c) {
  if (alg::kind(c) != Kind::B) return gen<F>(R, c);
  int j = alg::node(c);
  return gen<F>(R, alg::Fl(j)) + alg::tE<F>(R, j);
}

template <class F>
Element<F> leaf_value(const RootDatum* R, int j, Subst s) {
  switch (s) {
    case Subst::B: return gen<F>(R, alg::B(j));
    case Subst::F: return gen<F>(R, alg::Fl(j));
    case Subst::tE: return alg::tE<F>(R, j);
  }
  return Element<F>(R);
}

template <class F>
Element<F> evaluate_impl(const RootDatum* R, const Expr& e, const std::function<Element<F>(int)>& leaf, bool drop_kk) {
  if (e.op == Expr::Op::Leaf) return leaf(e.node);
  std::vector<Element<F>> v;
  v.reserve(e.args.size());
  for (const auto& a : e.args) v.push_back(evaluate_impl<F>(R, a, leaf, drop_kk));
  switch (e.op) {
    case Expr::Op::P: return P(v, alg::qpow<F>(e.qexp));
    case Expr::Op::Pprime: return Pprime(v, alg::qpow<F>(e.qexp));
    case Expr::Op::Bracket: return alg::qcomm(v[0], v[1], e.qexp);
    case Expr::Op::HatP: return hatP(R, e.node, v[0], v[1]);
    case Expr::Op::BoldP: return drop_kk ? hatP(R, e.node, v[0], v[1]) : boldP(R, e.node, v[0], v[1]);
    default: break;
  }
  throw std::logic_error("evaluate: bad node");
}

RootVec weight_of(const SubtermType& t) {
  RootVec w(t.size(), 0);
  for (std::size_t j = 0; j < t.size(); ++j) w[j] = t[j].first - t[j].second;
  return w;
}

int total_degree(const SubtermType& t) {
  int s = 0;
  for (const auto& [a, b] : t) s += a + b;
  return s;
}

bool pure_F(const SubtermType& t) {
  for (const auto& [a, b] : t)
    if (a > 0) return false;
  return true;
}

std::string join_types(const std::vector<SubtermType>& ts, std::size_t limit = 4) {
  std::string s;
  for (std::size_t k = 0; k < ts.size() && k < limit; ++k) s += (k ? "; " : "") + type_to_string(ts[k]);
  if (ts.size() > limit) s += "; ...";
  return s;
}

}  // namespace

template <class F>
Element<F> eta(const Element<F>& p) {
  const RootDatum* R = p.datum();
  if (!R) return p;
  alg::Hom<F> h;
  h.letter = [R](char c) { return eta_letter<F>(R, c); };
  return alg::apply_hom(h, p);
}

template <class F>
Element<F> iquantum_relation(const RootDatum* R, int i, int j) {
  if (i == j) throw std::invalid_argument("iquantum_relation: need i != j");
  int a = R->a(j, i), d = R->d(i);
  int e = 1 - a;
  char x = alg::B(i), y = alg::B(j);
  auto word = [&](const std::string& w, const CentralSum<F>& c) { return Element<F>::monomial(R, alg::Monomial{w, {}}, c); };
  Element<F> serre(R);
  for (int r = 0; r <= e; ++r) {
    auto c = alg::coeff<F>(scalars::qbinom(e, r, d));
    if (r % 2) c = -c;
    serre += word(std::string(e - r, x) + y + std::string(r, x), c);
  }
  Element<F> lhs = serre.scaled(-(alg::qpow<F>(d) * CentralSum<F>::kk(i, -1)));
  auto qi = [&](int n) { return alg::coeff<F>(scalars::qint(n, d)); };
  std::string X(1, x), Y(1, y);
  Element<F> rhs(R);
  switch (a) {
    case 0: break;
    case -1: rhs = gen<F>(R, y); break;
    case -2: rhs = alg::qcomm(gen<F>(R, x), gen<F>(R, y), CentralSum<F>(1)).scaled(qi(2) * qi(2)); break;
    case -3:
      rhs = (word(X + X + Y, CentralSum<F>(1)) + word(Y + X + X, CentralSum<F>(1))).scaled(CentralSum<F>(1) + qi(3)) -
            word(X + Y + X, qi(4) * (CentralSum<F>(1) + qi(2) * qi(2))) +
            gen<F>(R, y).scaled(alg::qpow<F>(-d) * qi(3) * qi(3) * CentralSum<F>::kk(i));
      break;
    default: throw std::invalid_argument("iquantum_relation: unsupported Cartan entry");
  }
  return lhs - rhs;
}

template <class F>
Element<F> P(const std::vector<Element<F>>& y, const CentralSum<F>& c) {
  if (y.empty()) throw std::invalid_argument("P_k: empty argument list");
  Element<F> acc = y.back();
  for (std::size_t k = y.size() - 1; k-- > 0;) acc = alg::qcomm(y[k], acc, c);
  return acc;
}

template <class F>
Element<F> Pprime(const std::vector<Element<F>>& y, const CentralSum<F>& c) {
  if (y.empty()) throw std::invalid_argument("P'_k: empty argument list");
  Element<F> acc = y.front();
  for (std::size_t k = 1; k < y.size(); ++k) acc = alg::qcomm(acc, y[k], c);
  return acc;
}

template <class F>
Element<F> hatP(const RootDatum* R, int i, const Element<F>& a, const Element<F>& b) {
  int d = R->d(i);
  Element<F> out(R);
  for (int r = 0; r <= 2; ++r) {
    auto c = alg::qpow<F>(d * r);
    if (r % 2) c = -c;
    out += (alg::divided_power(b, 2 - r, d) * a * alg::divided_power(b, r, d)).scaled(c);
  }
  return out;
}

template <class F>
Element<F> boldP(const RootDatum* R, int i, const Element<F>& a, const Element<F>& b) {
  return hatP(R, i, a, b) + a.scaled(CentralSum<F>::kk(i));
}

Expr Expr::leaf(int j) {
  Expr e;
  e.node = j;
  return e;
}
Expr Expr::p(int qexp, std::vector<Expr> args) {
  if (args.empty()) throw std::invalid_argument("P_k: empty argument list");
  if (args.size() == 1) return std::move(args[0]);
  Expr e;
  e.op = Op::P;
  e.qexp = qexp;
  e.args = std::move(args);
  return e;
}
Expr Expr::bold(int i, Expr a, Expr b) {
  Expr e;
  e.op = Op::BoldP;
  e.node = i;
  e.args = {std::move(a), std::move(b)};
  return e;
}
Expr Expr::hat(int i, Expr a, Expr b) {
  Expr e = bold(i, std::move(a), std::move(b));
  e.op = Op::HatP;
  return e;
}
Expr Expr::bracket(int qexp, Expr a, Expr b) {
  Expr e;
  e.op = Op::Bracket;
  e.qexp = qexp;
  e.args = {std::move(a), std::move(b)};
  return e;
}

std::string Expr::to_string() const {
  std::string head;
  switch (op) {
    case Op::Leaf: return "B_" + std::to_string(node);
    case Op::P: head = "P_" + std::to_string(args.size()); break;
    case Op::Pprime: head = "P'_" + std::to_string(args.size()); break;
    case Op::BoldP: head = "boldP_" + std::to_string(node); break;
    case Op::HatP: head = "hatP"; break;
    case Op::Bracket: head = "PP"; break;
  }
  if ((op == Op::P || op == Op::Pprime || op == Op::Bracket) && qexp != 1) head += "[q^" + std::to_string(qexp) + "]";
  std::string s = head + "(";
  for (std::size_t k = 0; k < args.size(); ++k) s += (k ? ", " : "") + args[k].to_string();
  return s + ")";
}

int Expr::letters() const {
  if (op == Op::Leaf) return 1;
  int s = 0;
  for (const auto& a : args) s += a.letters();
  if (op == Op::BoldP || op == Op::HatP) s += args[1].letters();  // b appears squared
  return s;
}

template <class F>
Element<F> evaluate(const RootDatum* R, const Expr& e, const std::function<Element<F>(int)>& leaf) {
  return evaluate_impl<F>(R, e, leaf, false);
}

// Uniform F / tE substitution uses hatP in place of boldP: the KK_i a tail is not of the
// form "letter substituted into B".
template <class F>
Element<F> evaluate(const RootDatum* R, const Expr& e, Subst s) {
  return evaluate_impl<F>(R, e, [R, s](int j) { return leaf_value<F>(R, j, s); }, s != Subst::B);
}

namespace {

std::vector<Expr> leaves(std::initializer_list<std::vector<int>> runs) {
  std::vector<Expr> out;
  for (const auto& run : runs)
    for (int j : run) out.push_back(Expr::leaf(j));
  return out;
}

// Inclusive run a, a+step, ..., b (empty if the range is empty).
std::vector<int> run(int a, int b) {
  std::vector<int> v;
  if (a <= b)
    for (int j = a; j <= b; ++j) v.push_back(j);
  else
    for (int j = a; j >= b; --j) v.push_back(j);
  return v;
}
std::vector<int> down(int a, int b) { return a >= b ? run(a, b) : std::vector<int>{}; }
std::vector<int> up(int a, int b) { return a <= b ? run(a, b) : std::vector<int>{}; }

Expr with_tail(int qexp, std::vector<Expr> front, Expr tail) {
  front.push_back(std::move(tail));
  return Expr::p(qexp, std::move(front));
}

}  // namespace

Expr omega_prime_expr(const RootDatum& R, int i) {
  int n = R.rank();
  if (i < 1 || i > n) throw std::out_of_range("omega_prime_expr: node out of range");
  switch (R.family()) {
    case weyl::Family::A: {
      Expr inner = Expr::p(1, leaves({up(i + 1, n), {0}}));
      return with_tail(1, leaves({down(i - 1, 1)}), inner);
    }
    case weyl::Family::D: {
      if (i <= n - 2) {
        Expr inner, mid;
        if (i % 2 == 0) {
          inner = Expr::p(1, leaves({{n}, down(n - 2, 2), {0}}));
          mid = with_tail(1, leaves({up(i + 1, n - 1)}), inner);
        } else {
          inner = Expr::p(1, leaves({{n - 1}, down(n - 2, 2), {0}}));
          mid = with_tail(1, leaves({up(i + 1, n - 2), {n}}), inner);
        }
        return with_tail(1, leaves({down(i - 1, 1)}), mid);
      }
      int first = i == n - 1 ? n : n - 1;
      Expr inner = Expr::p(1, leaves({{first}, down(n - 2, 2), {0}}));
      return with_tail(1, leaves({down(n - 2, 1)}), inner);
    }
    case weyl::Family::B: {
      if (i < n) {
        Expr chain = Expr::p(2, leaves({down(n - 1, 2), {0}}));
        Expr bp = Expr::bold(n, chain, Expr::leaf(n));
        Expr mid = with_tail(2, leaves({up(i + 1, n - 1)}), bp);
        return with_tail(2, leaves({down(i - 1, 1)}), mid);
      }
      Expr inner = Expr::p(2, leaves({down(n, 2), {0}}));
      return with_tail(2, leaves({down(n - 1, 1)}), inner);
    }
    case weyl::Family::C: {
      if (i < n) {
        // The bracket next to B_0 carries q_0 = q^2.
        Expr chain = with_tail(1, leaves({down(n - 1, 2)}), Expr::bracket(2, Expr::leaf(1), Expr::leaf(0)));
        Expr pp = Expr::bracket(2, Expr::leaf(n), chain);
        Expr mid = with_tail(1, leaves({up(i + 1, n - 1)}), pp);
        return with_tail(1, leaves({down(i - 1, 1)}), mid);
      }
      Expr acc = Expr::leaf(0);
      for (int k = 1; k <= n - 1; ++k) acc = Expr::bold(k, acc, Expr::leaf(k));
      return acc;
    }
  }
  throw std::invalid_argument("omega_prime_expr: unsupported family");
}

template <class F>
Element<F> omega_prime_polynomial(const RootDatum* R, int i) {
  return evaluate<F>(R, omega_prime_expr(*R, i), Subst::B);
}

std::string type_to_string(const SubtermType& t) {
  std::ostringstream s;
  bool first = true;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (t[j].first) s << (first ? "" : " ") << "e" << j << "^" << t[j].first, first = false;
    if (t[j].second) s << (first ? "" : " ") << "f" << j << "^" << t[j].second, first = false;
  }
  return first ? "1" : s.str();
}

bool is_mixed(const SubtermType& t) {
  bool plus = false, minus = false;
  for (const auto& [a, b] : t) plus |= a > 0, minus |= b > 0;
  return plus && minus;
}

template <class F>
std::map<SubtermType, Element<F>> subterm_decompose(const Element<F>& p) {
  const RootDatum* R = p.datum();
  std::map<SubtermType, typename Element<F>::TermMap> raw;
  if (!R) return {};
  int nodes = R->nodes();
  std::vector<Element<F>> fl, te;
  for (int j = 0; j < nodes; ++j) {
    fl.push_back(gen<F>(R, alg::Fl(j)));
    te.push_back(alg::tE<F>(R, j));
  }
  for (const auto& [m, c] : p.terms()) {
    SubtermType type(nodes, {0, 0});
    // Depth-first over letter positions, sharing prefix products.
    std::function<void(std::size_t, const Element<F>&)> walk = [&](std::size_t pos, const Element<F>& acc) {
      if (pos == m.w.size()) {
        Element<F> full = acc * Element<F>::kmon(R, m.k);
        for (const auto& [mm, cc] : full.terms()) Element<F>::accumulate(raw[type], mm, cc);
        return;
      }
      char l = m.w[pos];
      if (alg::kind(l) != Kind::B) {
        walk(pos + 1, acc * gen<F>(R, l));
        return;
      }
      int j = alg::node(l);
      ++type[j].first;
      walk(pos + 1, acc * te[j]);
      --type[j].first;
      ++type[j].second;
      walk(pos + 1, acc * fl[j]);
      --type[j].second;
    };
    walk(0, Element<F>(R, c));
  }
  std::map<SubtermType, Element<F>> out;
  for (auto& [t, tm] : raw) {
    Element<F> x = Element<F>::from_map(R, std::move(tm));
    if (!x.is_zero()) out.emplace(t, uq::triangular_form(x));
  }
  return out;
}

bool GoodPolyReport::pass() const {
  bool ok = mixed_vanish.pass && degree_bound.pass && p_plus.pass && p_minus_minus.pass;
  if (braid_plus) ok = ok && braid_plus->pass;
  if (braid_minus) ok = ok && braid_minus->pass;
  return ok;
}

namespace {

template <class F>
GoodPolyReport check_good_impl(const Element<F>& p, int i, const Element<F>& plus_target, const Element<F>& minus_target) {
  const RootDatum* R = p.datum();
  GoodPolyReport rep;
  rep.i = i;
  auto parts = subterm_decompose(p);
  rep.subterms = parts.size();
  for (const auto& [t, x] : parts)
    if (t[0].first + t[0].second != 1)
      throw std::invalid_argument("check_i_good: subterm " + type_to_string(t) + " violates d_0^+ + d_0^- = 1");

  // (a) Mixed subterms with d_0^+ > 0. A nonzero one is accepted only if the other
  // non-leading d_0^+ = 1 subterms of the same degree cancel it.
  std::vector<SubtermType> nonzero_mixed;
  for (const auto& [t, x] : parts)
    if (t[0].first > 0 && is_mixed(t) && !uq::is_zero(x)) nonzero_mixed.push_back(t);
  if (nonzero_mixed.empty()) {
    rep.mixed_vanish = {true, "all mixed subterms with d_0^+ > 0 vanish"};
  } else {
    int top = 0;
    for (const auto& [t, x] : parts)
      if (t[0].first > 0 && !is_mixed(t)) top = std::max(top, total_degree(t));
    std::map<RootVec, Element<F>> classes;
    for (const auto& [t, x] : parts) {
      if (t[0].first == 0 || (!is_mixed(t) && total_degree(t) == top)) continue;
      auto w = weight_of(t);
      auto it = classes.find(w);
      if (it == classes.end()) classes.emplace(w, x);
      else it->second += x;
    }
    std::vector<SubtermType> bad;
    for (const auto& t : nonzero_mixed)
      if (!uq::is_zero(classes.at(weight_of(t)))) bad.push_back(t);
    if (bad.empty())
      rep.mixed_vanish = {true, std::to_string(nonzero_mixed.size()) +
                                    " mixed subterm(s) are nonzero but cancel against lower pure subterms of the same degree: " +
                                    join_types(nonzero_mixed)};
    else
      rep.mixed_vanish = {false, "nonvanishing mixed subterms: " + join_types(bad)};
  }

  // (b) degree bound
  RootVec bound = R->theta();
  bound[i] -= 1;
  std::vector<SubtermType> over;
  for (const auto& [t, x] : parts) {
    for (int j = 1; j < R->nodes(); ++j)
      if (t[j].first + t[j].second > bound[j]) {
        over.push_back(t);
        break;
      }
  }
  rep.degree_bound = over.empty() ? Verdict{true, "all subterms within theta - alpha_" + std::to_string(i)}
                                  : Verdict{false, "exceeds theta - alpha_" + std::to_string(i) + ": " + join_types(over)};

  // (c) P_+
  Element<F> p_plus(R);
  for (const auto& [t, x] : parts)
    if (t[0].first == 1) p_plus += x;
  rep.p_plus = uq::equal_mod_relations(p_plus, plus_target) ? Verdict{true, "P_+ matches"} : Verdict{false, "P_+ differs"};

  // (d) P_--: pure F subterms of maximal total degree; must be a single type.
  std::vector<SubtermType> top_f;
  int best = -1;
  for (const auto& [t, x] : parts) {
    if (!pure_F(t)) continue;
    int d = total_degree(t);
    if (d > best) best = d, top_f.clear();
    if (d == best) top_f.push_back(t);
  }
  if (top_f.size() != 1) {
    rep.p_minus_minus = {false, top_f.empty() ? "no pure F subterm" : "maximal pure F subterm not unique: " + join_types(top_f)};
  } else {
    bool eq = uq::equal_mod_relations(parts.at(top_f[0]), minus_target);
    rep.p_minus_minus = {eq, std::string(eq ? "P_-- matches" : "P_-- differs") + " (type " + type_to_string(top_f[0]) + ")"};
  }
  return rep;
}

template <class F>
Element<F> braid_target(const RootDatum* R, int i, Subst s) {
  Element<F> x = s == Subst::F ? gen<F>(R, alg::Fl(i)) : alg::tE<F>(R, i);
  return braid::lusztig_T_word(weyl::omega_prime_word(*R, i), x);
}

}  // namespace

template <class F>
GoodPolyReport check_i_good(const Element<F>& p, int i, bool cross_check_braid) {
  const RootDatum* R = p.datum();
  if (!R) throw std::invalid_argument("check_i_good: empty polynomial");
  if (i < 1 || i > R->rank()) throw std::out_of_range("check_i_good: node out of range");
  // Targets: uniform substitution of the closed form when p is that form, else the braid images.
  Expr ex = omega_prime_expr(*R, i);
  bool closed = p == evaluate<F>(R, ex, Subst::B);
  Element<F> plus = closed ? evaluate<F>(R, ex, Subst::tE) : braid_target<F>(R, i, Subst::tE);
  Element<F> minus = closed ? evaluate<F>(R, ex, Subst::F) : braid_target<F>(R, i, Subst::F);
  GoodPolyReport rep = check_good_impl(p, i, plus, minus);
  if (cross_check_braid) {
    Element<F> bp = closed ? braid_target<F>(R, i, Subst::tE) : plus;
    Element<F> bm = closed ? braid_target<F>(R, i, Subst::F) : minus;
    bool a = uq::equal_mod_relations(plus, bp), b = uq::equal_mod_relations(minus, bm);
    rep.braid_plus = Verdict{a, a ? "tE form equals T_w(tE_i)" : "tE form differs from T_w(tE_i)"};
    rep.braid_minus = Verdict{b, b ? "F form equals T_w(F_i)" : "F form differs from T_w(F_i)"};
  }
  return rep;
}

template <class F>
Element<F> lift_to_B(const Element<F>& z) {
  const RootDatum* R = z.datum();
  if (!R) return z;
  Element<F> out(R), rem = uq::normal_form(z);
  while (!rem.is_zero()) {
    std::size_t top = 0;
    bool found = false;
    for (const auto& [m, c] : rem.terms()) {
      bool f_only = std::all_of(m.w.begin(), m.w.end(), [](char l) { return alg::kind(l) == Kind::F; });
      if (!f_only) continue;
      if (!found || m.w.size() > top) top = m.w.size();
      found = true;
    }
    if (!found) throw std::invalid_argument("lift_to_B: element is not in the image of eta");
    typename Element<F>::TermMap lead;
    for (const auto& [m, c] : rem.terms()) {
      if (m.w.size() != top) continue;
      if (!std::all_of(m.w.begin(), m.w.end(), [](char l) { return alg::kind(l) == Kind::F; })) continue;
      if (!m.k.is_zero()) throw std::invalid_argument("lift_to_B: element is not in the image of eta");
      std::string bw = m.w;
      for (char& l : bw) l = alg::B(alg::node(l));
      Element<F>::accumulate(lead, alg::Monomial{bw, {}}, c);
    }
    Element<F> b = Element<F>::from_map(R, std::move(lead));
    out += b;
    rem = uq::normal_form(rem - eta(b));
  }
  return out;
}

template <class F>
Element<F> reduce_B(const Element<F>& p) {
  return lift_to_B(uq::normal_form(eta(p)));
}

namespace {

int simple_image(const RootDatum& R, const weyl::Word& u, int j) {
  RootVec r = weyl::act_on_root(R, u, R.simple(j));
  int idx = -1;
  for (int k = 0; k < R.nodes(); ++k) {
    if (r[k] == 0) continue;
    if (r[k] != 1 || idx >= 0) return -1;
    idx = k;
  }
  return idx;
}

template <class F>
alg::Hom<F> eta_step_hom(const RootDatum* R, const weyl::Word& w, std::function<Element<F>(char)> letter) {
  alg::Hom<F> h;
  h.letter = std::move(letter);
  h.central = [R, w](const scalars::CentralMonomial& m) { return braid::act_on_kk(*R, w, m); };
  h.step = [](const Element<F>& x) { return uq::normal_form(x); };
  return h;
}

// T_w(B_c) with its eta image, suffix by suffix.
template <class F>
QspImage<F> qsp_generator(const RootDatum* R, const weyl::Word& w, int c) {
  QspImage<F> x{gen<F>(R, alg::B(c)), eta_letter<F>(R, alg::B(c))};
  for (std::size_t k = w.size(); k-- > 0;) {
    weyl::Word suffix(w.begin() + static_cast<long>(k), w.end());
    int m = simple_image(*R, suffix, c);
    if (m >= 0) {
      x = {gen<F>(R, alg::B(m)), eta_letter<F>(R, alg::B(m))};
      continue;
    }
    weyl::Letter l = w[k];
    std::unordered_map<char, Element<F>> img;
    auto h = eta_step_hom<F>(R, {l}, [&](char b) {
      auto it = img.find(b);
      if (it == img.end()) it = img.emplace(b, uq::normal_form(eta(braid::qsp_T(l, gen<F>(R, b))))).first;
      return it->second;
    });
    Element<F> z = uq::normal_form(alg::apply_hom(h, x.poly));
    x = {lift_to_B(z), z};
  }
  return x;
}

}  // namespace

template <class F>
QspImage<F> qsp_T_word_reduced(const weyl::Word& w, const Element<F>& p) {
  const RootDatum* R = p.datum();
  if (!R) return {p, p};
  if (!weyl::is_reduced(*R, w)) throw std::invalid_argument("braid word is not reduced: " + weyl::word_to_string(w));
  std::unordered_map<char, Element<F>> img;
  auto h = eta_step_hom<F>(R, w, [&](char b) {
    if (alg::kind(b) != Kind::B) throw std::invalid_argument("qsp_T acts on B letters only");
    auto it = img.find(b);
    if (it == img.end()) it = img.emplace(b, qsp_generator<F>(R, w, alg::node(b)).image).first;
    return it->second;
  });
  Element<F> z = uq::normal_form(alg::apply_hom(h, p));
  return {lift_to_B(z), z};
}

template <class F>
Element<F> eta_of_qsp_image(const RootDatum* R, int i) {
  auto w = weyl::omega_prime_word(*R, i);
  return qsp_generator<F>(R, w, i).image;
}

template <class F>
CompatReport weak_compat_check(const RootDatum* R, int i) {
  Element<F> lhs = eta_of_qsp_image<F>(R, i);
  auto w = weyl::omega_prime_word(*R, i);
  Element<F> rhs = braid::lusztig_T_word(w, gen<F>(R, alg::Fl(i))) + braid::lusztig_T_word(w, alg::tE<F>(R, i));
  Element<F> diff = uq::normal_form(lhs - rhs);
  CompatReport rep;
  rep.difference_terms = diff.size();
  rep.pass = uq::in_positive_subalgebra(diff, uq::Positivity::d_at_least(i, 1));
  rep.detail = rep.pass ? "difference lies in the d_" + std::to_string(i) + ">=1 positive part"
                        : "difference has components outside the d_" + std::to_string(i) + ">=1 positive part";
  return rep;
}

template <class F>
Element<F> extract_Qi(const Element<F>& p, int i) {
  const RootDatum* R = p.datum();
  GoodPolyReport rep = check_i_good(p, i);
  if (!rep.pass()) throw std::invalid_argument("extract_Qi: polynomial is not " + std::to_string(i) + "-good");
  auto parts = subterm_decompose(p);
  Element<F> p_minus(R);
  std::vector<SubtermType> top_f;
  int best = -1;
  for (const auto& [t, x] : parts) {
    if (t[0].second == 1) p_minus += x;
    if (!pure_F(t)) continue;
    int d = total_degree(t);
    if (d > best) best = d, top_f.clear();
    if (d == best) top_f.push_back(t);
  }
  Element<F> p_mm = parts.at(top_f.at(0));
  // C_i = C^{-1} KK_i, C = KK_delta
  scalars::CentralMonomial ci = scalars::CentralMonomial::unit(i);
  for (int j = 0; j < R->nodes(); ++j) ci.e[j] = static_cast<int16_t>(ci.e[j] - R->delta()[j]);
  return uq::normal_form((p_minus - p_mm).scaled(CentralSum<F>(ci, F(1))));
}

namespace {

template <class F>
Element<F> b_eta(const RootDatum* R, int j) {
  return eta_letter<F>(R, alg::B(j));
}

template <class F>
Element<F> fl(const RootDatum* R, int j) {
  return gen<F>(R, alg::Fl(j));
}

}  // namespace

template <class F>
std::vector<IdentityResult> verify_type_d_identities(const RootDatum* R) {
  if (R->family() != weyl::Family::D || R->rank() < 4) throw std::invalid_argument("type D identities: type D, n >= 4");
  int n = R->rank();
  auto q1 = alg::qpow<F>(1);
  std::vector<IdentityResult> out;

  // [F_{n-1}, P_{n-1}(tE_n, tE_{n-2}, B_{n-3}, ..., B_2, F_0)]_q
  {
    std::vector<Element<F>> y = {alg::tE<F>(R, n), alg::tE<F>(R, n - 2)};
    for (int j = n - 3; j >= 2; --j) y.push_back(b_eta<F>(R, j));
    y.push_back(fl<F>(R, 0));
    Element<F> x = alg::qcomm(fl<F>(R, n - 1), P(y, q1), q1);
    bool z = uq::is_zero(x);
    out.push_back({"hard3", z, z ? "vanishes" : "nonzero"});
  }
  // [F_{n-2}, [F_{n-1}, P_{n-1}(tE_n, F_{n-2}, B_{n-3}, ..., B_2, F_0)]_q]_q
  {
    std::vector<Element<F>> y = {alg::tE<F>(R, n), fl<F>(R, n - 2)};
    for (int j = n - 3; j >= 2; --j) y.push_back(b_eta<F>(R, j));
    y.push_back(fl<F>(R, 0));
    Element<F> x = alg::qcomm(fl<F>(R, n - 2), alg::qcomm(fl<F>(R, n - 1), P(y, q1), q1), q1);
    bool z = uq::is_zero(x);
    out.push_back({"hard4", z, z ? "vanishes" : "nonzero"});
  }
  // [P_i(tE_{i-1}, B_{i-2}, ..., B_1, P_{n-i}(tE_{i+1}, B_{i+2}, ..., B_{n-1}, R)), F_i]_{q^{-2}}
  // with R = P_{n-1}(B_n, B_{n-2}, ..., B_2, F_0), in the d_i >= 2 positive part.
  for (int i = 2; i <= n - 2; ++i) {
    std::vector<Element<F>> r = {b_eta<F>(R, n)};
    for (int j = n - 2; j >= 2; --j) r.push_back(b_eta<F>(R, j));
    r.push_back(fl<F>(R, 0));
    std::vector<Element<F>> mid = {alg::tE<F>(R, i + 1)};
    for (int j = i + 2; j <= n - 1; ++j) mid.push_back(b_eta<F>(R, j));
    mid.push_back(P(r, q1));
    std::vector<Element<F>> outer = {alg::tE<F>(R, i - 1)};
    for (int j = i - 2; j >= 1; --j) outer.push_back(b_eta<F>(R, j));
    outer.push_back(P(mid, q1));
    Element<F> x = alg::qcomm(P(outer, q1), fl<F>(R, i), -2);
    bool ok = uq::in_positive_subalgebra(x, uq::Positivity::d_at_least(i, 2));
    out.push_back({"commutator_F" + std::to_string(i), ok, ok ? "in the d_" + std::to_string(i) + ">=2 positive part" : "outside"});
  }
  return out;
}

#define IQG_INSTANTIATE(F)                                                                                  \
  template Element<F> eta(const Element<F>&);                                                              \
  template Element<F> iquantum_relation(const RootDatum*, int, int);                                       \
  template Element<F> P(const std::vector<Element<F>>&, const CentralSum<F>&);                             \
  template Element<F> Pprime(const std::vector<Element<F>>&, const CentralSum<F>&);                        \
  template Element<F> hatP(const RootDatum*, int, const Element<F>&, const Element<F>&);                   \
  template Element<F> boldP(const RootDatum*, int, const Element<F>&, const Element<F>&);                  \
  template Element<F> evaluate(const RootDatum*, const Expr&, const std::function<Element<F>(int)>&);      \
  template Element<F> evaluate(const RootDatum*, const Expr&, Subst);                                      \
  template Element<F> omega_prime_polynomial(const RootDatum*, int);                                       \
  template std::map<SubtermType, Element<F>> subterm_decompose(const Element<F>&);                         \
  template GoodPolyReport check_i_good(const Element<F>&, int, bool);                                      \
  template Element<F> eta_of_qsp_image(const RootDatum*, int);                                             \
  template Element<F> lift_to_B(const Element<F>&);                                                        \
  template Element<F> reduce_B(const Element<F>&);                                                         \
  template QspImage<F> qsp_T_word_reduced(const weyl::Word&, const Element<F>&);                           \
  template CompatReport weak_compat_check<F>(const RootDatum*, int);                                       \
  template Element<F> extract_Qi(const Element<F>&, int);                                                  \
  template std::vector<IdentityResult> verify_type_d_identities<F>(const RootDatum*);

IQG_INSTANTIATE(RationalFunc)
IQG_INSTANTIATE(Fp)

}  // namespace iqg::iq
