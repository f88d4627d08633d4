#include "iqg/freealg.hpp"

#include <cctype>
#include <memory>
#include <mutex>
#include <sstream>

namespace iqg::alg {

using scalars::LaurentPoly;
using scalars::Rational;
using scalars::Scalar;

const RootDatum* datum(weyl::Family f, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<RootDatum>> table;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = table[{static_cast<int>(f), n}];
  if (!slot) slot = std::make_unique<RootDatum>(RootDatum::make(f, n));
  return slot.get();
}

std::string letter_name(char c) {
  static const char names[] = {'E', 'F', 'B'};
  return std::string(1, names[static_cast<int>(kind(c))]) + std::to_string(node(c));
}

std::string word_name(const std::string& w) {
  std::string s;
  for (char c : w) {
    if (!s.empty()) s += " ";
    s += letter_name(c);
  }
  return s;
}

KVec k_node(const RootDatum& R, int i, int power) {
  KVec k;
  if (i == 0) {
    for (int j = 1; j <= R.rank(); ++j) k.e[j] = static_cast<int16_t>(-power * R.delta()[j]);
  } else {
    k.e[i] = static_cast<int16_t>(power);
  }
  return k;
}

int pairing(const RootDatum& R, const KVec& mu, int j) {
  int s = 0;
  for (int k = 1; k <= R.rank(); ++k)
    if (mu.e[k]) s += mu.e[k] * R.form(k, j);
  return s;
}

int pairing(const RootDatum& R, const KVec& mu, const std::string& w) {
  int s = 0;
  for (char c : w) {
    Kind t = kind(c);
    if (t == Kind::B) continue;
    int p = pairing(R, mu, node(c));
    s += t == Kind::E ? p : -p;
  }
  return s;
}

RootVec letter_degree(const RootDatum& R, char c) {
  RootVec d(R.nodes(), 0);
  Kind t = kind(c);
  if (t == Kind::B) throw std::invalid_argument("B letters carry no Q-degree");
  int sign = t == Kind::E ? 1 : -1;
  int i = node(c);
  if (i == 0) {
    for (int j = 1; j <= R.rank(); ++j) d[j] = -sign * R.delta()[j];
  } else {
    d[i] = sign;
  }
  return d;
}

RootVec word_degree(const RootDatum& R, const std::string& w) {
  RootVec d(R.nodes(), 0);
  for (char c : w) {
    RootVec x = letter_degree(R, c);
    for (int j = 0; j < R.nodes(); ++j) d[j] += x[j];
  }
  return d;
}

// ---------------------------------------------------------------- text form

namespace {

std::string poly_sexpr(const LaurentPoly& p) {
  std::string s = "(poly";
  for (const auto& [e, c] : p.terms()) s += " " + std::to_string(e) + " " + c.get_str();
  return s + ")";
}

std::string rf_sexpr(const RationalFunc& r) {
  if (r.is_laurent()) return poly_sexpr(r.num());
  return "(rf " + poly_sexpr(r.num()) + " " + poly_sexpr(r.den()) + ")";
}

std::string central_sexpr(const CentralMonomial& m) {
  std::string s;
  for (int i = 0; i < kMaxNodes; ++i)
    if (m.e[i]) s += " (KK " + std::to_string(i) + " " + std::to_string(m.e[i]) + ")";
  return s;
}

struct Node {
  std::string atom;
  std::vector<Node> kids;
  bool is_list = false;
};

class Reader {
 public:
  explicit Reader(const std::string& t) : t_(t) {}
  Node read() {
    skip();
    if (p_ >= t_.size()) throw std::invalid_argument("sexpr: unexpected end of input");
    Node n;
    if (t_[p_] == '(') {
      ++p_;
      n.is_list = true;
      for (;;) {
        skip();
        if (p_ >= t_.size()) throw std::invalid_argument("sexpr: missing ')'");
        if (t_[p_] == ')') {
          ++p_;
          break;
        }
        n.kids.push_back(read());
      }
    } else if (t_[p_] == ')') {
      throw std::invalid_argument("sexpr: unexpected ')'");
    } else {
      std::size_t b = p_;
      while (p_ < t_.size() && !std::isspace(static_cast<unsigned char>(t_[p_])) && t_[p_] != '(' && t_[p_] != ')')
        ++p_;
      n.atom = t_.substr(b, p_ - b);
    }
    return n;
  }
  void finish() {
    skip();
    if (p_ != t_.size()) throw std::invalid_argument("sexpr: trailing input");
  }

 private:
  void skip() {
    while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_]))) ++p_;
  }
  const std::string& t_;
  std::size_t p_ = 0;
};

int to_int(const Node& n) {
  if (n.is_list) throw std::invalid_argument("sexpr: expected an integer");
  std::size_t used = 0;
  int v = std::stoi(n.atom, &used);
  if (used != n.atom.size()) throw std::invalid_argument("sexpr: bad integer '" + n.atom + "'");
  return v;
}

Rational to_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("sexpr: bad rational '" + s + "'");
  r.canonicalize();
  return r;
}

RationalFunc as_rf(const AlgElement& x) {
  if (x.is_zero()) return RationalFunc();
  Scalar c = x.constant_term();
  if (x.size() != 1 || c.is_zero() || c.size() != 1 || !c.terms()[0].first.is_one())
    throw std::invalid_argument("sexpr: expected a rational function of q");
  return c.terms()[0].second;
}

class Evaluator {
 public:
  explicit Evaluator(const RootDatum* R) : R_(R) {}

  AlgElement eval(const Node& n) {
    if (!n.is_list) return AlgElement(R_, Scalar(RationalFunc(LaurentPoly(to_rational(n.atom)))));
    if (n.kids.empty() || n.kids[0].is_list) throw std::invalid_argument("sexpr: expected an operator");
    const std::string& op = n.kids[0].atom;
    auto arity = [&](std::size_t k) {
      if (n.kids.size() != k + 1) throw std::invalid_argument("sexpr: '" + op + "' takes " + std::to_string(k) + " arguments");
    };
    auto node_index = [&](const Node& a) {
      int i = to_int(a);
      if (i < 0 || i > R_->rank()) throw std::invalid_argument("sexpr: node index out of range");
      return i;
    };
    if (op == "add") {
      AlgElement s(R_);
      for (std::size_t k = 1; k < n.kids.size(); ++k) s += eval(n.kids[k]);
      return s;
    }
    if (op == "mul") {
      AlgElement p = one<RationalFunc>(R_);
      for (std::size_t k = 1; k < n.kids.size(); ++k) p = p * eval(n.kids[k]);
      return p;
    }
    if (op == "neg") {
      arity(1);
      return -eval(n.kids[1]);
    }
    if (op == "sub") {
      arity(2);
      return eval(n.kids[1]) - eval(n.kids[2]);
    }
    if (op == "E" || op == "F" || op == "B") {
      arity(1);
      int i = node_index(n.kids[1]);
      char c = op == "E" ? E(i) : (op == "F" ? Fl(i) : B(i));
      return AlgElement::gen(R_, c);
    }
    if (op == "K") {
      arity(2);
      return K<RationalFunc>(R_, node_index(n.kids[1]), to_int(n.kids[2]));
    }
    if (op == "KK") {
      arity(2);
      return KK<RationalFunc>(R_, node_index(n.kids[1]), to_int(n.kids[2]));
    }
    if (op == "q") {
      arity(1);
      return AlgElement(R_, Scalar::q_power(to_int(n.kids[1])));
    }
    if (op == "poly") {
      if (n.kids.size() % 2 == 0) throw std::invalid_argument("sexpr: poly needs exponent/coefficient pairs");
      std::map<int, Rational> t;
      for (std::size_t k = 1; k < n.kids.size(); k += 2) {
        if (n.kids[k + 1].is_list) throw std::invalid_argument("sexpr: bad coefficient");
        t[to_int(n.kids[k])] += to_rational(n.kids[k + 1].atom);
      }
      return AlgElement(R_, Scalar(RationalFunc(LaurentPoly::from_terms(t))));
    }
    if (op == "rf") {
      arity(2);
      RationalFunc den = as_rf(eval(n.kids[2]));
      if (den.is_zero()) throw std::invalid_argument("sexpr: zero denominator");
      return AlgElement(R_, Scalar(as_rf(eval(n.kids[1])) / den));
    }
    if (op == "qint") {
      arity(2);
      return AlgElement(R_, Scalar(scalars::qint(to_int(n.kids[1]), to_int(n.kids[2]))));
    }
    if (op == "pow") {
      arity(2);
      return power(eval(n.kids[1]), to_int(n.kids[2]));
    }
    if (op == "dp") {
      arity(2);
      AlgElement x = eval(n.kids[1]);
      if (x.size() != 1 || x.terms()[0].first.w.size() != 1)
        throw std::invalid_argument("sexpr: dp expects a single generator");
      return divided_power<RationalFunc>(R_, x.terms()[0].first.w[0], to_int(n.kids[2]))
          .scaled(x.terms()[0].second);
    }
    if (op == "qcomm") {
      arity(3);
      AlgElement v = eval(n.kids[3]);
      Scalar vs = v.is_zero() ? Scalar() : v.constant_term();
      if (!v.is_scalar()) throw std::invalid_argument("sexpr: qcomm parameter must be a scalar");
      return qcomm(eval(n.kids[1]), eval(n.kids[2]), vs);
    }
    throw std::invalid_argument("sexpr: unknown operator '" + op + "'");
  }

 private:
  const RootDatum* R_;
};

}  // namespace

std::string scalar_sexpr(const Scalar& s) {
  if (s.is_zero()) return "(add)";
  std::string out = "(add";
  for (const auto& [m, r] : s.terms()) out += " (mul " + rf_sexpr(r) + central_sexpr(m) + ")";
  return out + ")";
}

std::string to_sexpr(const AlgElement& x) {
  std::string out = "(add";
  for (const auto& [m, c] : x.terms()) {
    for (const auto& [cm, r] : c.terms()) {
      out += " (mul " + rf_sexpr(r) + central_sexpr(cm);
      for (char l : m.w) {
        static const char* ops[] = {"E", "F", "B"};
        out += std::string(" (") + ops[static_cast<int>(kind(l))] + " " + std::to_string(node(l)) + ")";
      }
      for (int i = 1; i < kMaxNodes; ++i)
        if (m.k.e[i]) out += " (K " + std::to_string(i) + " " + std::to_string(m.k.e[i]) + ")";
      out += ")";
    }
  }
  return out + ")";
}

AlgElement parse_sexpr(const RootDatum* R, const std::string& text) {
  Reader rd(text);
  Node n = rd.read();
  rd.finish();
  return Evaluator(R).eval(n);
}

}  // namespace iqg::alg
