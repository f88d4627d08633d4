#include "iqg/qchar.hpp"

#include <algorithm>
#include <sstream>

namespace iqg::qchar {

std::string SpectralParam::to_string() const {
  std::ostringstream os;
  auto part = [&](const char* name, int e) {
    if (e == 0) return;
    if (os.tellp() > 0) os << '*';
    os << name;
    if (e != 1) os << '^' << e;
  };
  part("C", eC);
  part("a", ea);
  part("q", eq);
  return os.tellp() > 0 ? os.str() : "1";
}

YMonomial YMonomial::Y(int i, SpectralParam a, int e) {
  YMonomial m;
  if (e != 0) m.exps[{i, a}] = e;
  return m;
}

YMonomial YMonomial::operator*(const YMonomial& o) const {
  YMonomial r = *this;
  for (const auto& [k, e] : o.exps) {
    int v = (r.exps[k] += e);
    if (v == 0) r.exps.erase(k);
  }
  return r;
}

YMonomial YMonomial::inverse() const {
  YMonomial r = *this;
  for (auto& [k, e] : r.exps) e = -e;
  return r;
}

std::string YMonomial::to_string() const {
  if (exps.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, e] : exps) {
    if (!first) os << ' ';
    first = false;
    os << "Y_{" << k.first << ',' << k.second.to_string() << '}';
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

YPolynomial::YPolynomial(const YMonomial& m, long c) {
  if (c != 0) terms[m] = c;
}

YPolynomial& YPolynomial::operator+=(const YPolynomial& o) {
  for (const auto& [m, c] : o.terms) {
    long v = (terms[m] += c);
    if (v == 0) terms.erase(m);
  }
  return *this;
}

YPolynomial YPolynomial::operator+(const YPolynomial& o) const {
  YPolynomial r = *this;
  return r += o;
}

YPolynomial YPolynomial::operator-(const YPolynomial& o) const {
  YPolynomial r = *this;
  for (const auto& [m, c] : o.terms) r += YPolynomial(m, -c);
  return r;
}

YPolynomial YPolynomial::operator*(const YPolynomial& o) const {
  YPolynomial r;
  for (const auto& [m1, c1] : terms)
    for (const auto& [m2, c2] : o.terms) r += YPolynomial(m1 * m2, c1 * c2);
  return r;
}

std::string YPolynomial::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    long a = c < 0 ? -c : c;
    if (a != 1) os << a << ' ';
    os << m.to_string();
  }
  return os.str();
}

YMonomial y_twist(const YMonomial& m) {
  YMonomial r;
  for (const auto& [k, e] : m.exps) {
    auto [i, a] = k;
    r = r * YMonomial::Y(i, SpectralParam::C() * a, e) * YMonomial::Y(i, a.inverse(), -e);
  }
  return r;
}

YPolynomial y_twist(const YPolynomial& p) {
  YPolynomial r;
  for (const auto& [m, c] : p.terms) r += YPolynomial(y_twist(m), c);
  return r;
}

std::vector<YMonomial> chi_q_monomials_sl2(int n, SpectralParam a) {
  std::vector<YMonomial> out;
  for (int i = 0; i <= n; ++i) {
    YMonomial m;
    for (int k = i + 1; k <= n; ++k) m = m * YMonomial::Y(1, a * SpectralParam::q(n - 2 * k + 1));
    for (int k = 1; k <= i; ++k) m = m * YMonomial::Y(1, a * SpectralParam::q(n - 2 * k + 3), -1);
    out.push_back(m);
  }
  return out;
}

YPolynomial chi_q_eval_sl2(int n, SpectralParam a) {
  YPolynomial r;
  for (const auto& m : chi_q_monomials_sl2(n, a)) r += YPolynomial(m);
  return r;
}

std::vector<YMonomial> boundary_monomials_sl2(int n, SpectralParam a) {
  SpectralParam Ca = SpectralParam::C() * a, ai = a.inverse();
  std::vector<YMonomial> out;
  for (int i = 0; i <= n; ++i) {
    YMonomial m;
    for (int k = i + 1; k <= n; ++k)
      m = m * YMonomial::Y(1, Ca * SpectralParam::q(n - 2 * k + 1)) *
          YMonomial::Y(1, ai * SpectralParam::q(-n + 2 * k - 1), -1);
    for (int k = 1; k <= i; ++k)
      m = m * YMonomial::Y(1, ai * SpectralParam::q(-n + 2 * k - 3)) *
          YMonomial::Y(1, Ca * SpectralParam::q(n - 2 * k + 3), -1);
    out.push_back(m);
  }
  return out;
}

BoundaryChi boundary_chi_eval_sl2(int n, SpectralParam a) {
  BoundaryChi r;
  for (const auto& m : boundary_monomials_sl2(n, a)) r.value += YPolynomial(m);
  r.twisted = y_twist(chi_q_eval_sl2(n, a));
  return r;
}

SpectralParam onsager_partner(SpectralParam a) { return SpectralParam::q(-2) * SpectralParam::C(-1) * a.inverse(); }

bool monomial_symmetry_check(int n, SpectralParam a) {
  auto m = boundary_monomials_sl2(n, a);
  auto mp = boundary_monomials_sl2(n, onsager_partner(a));
  for (int i = 0; i <= n; ++i)
    if (m[i] != mp[n - i]) return false;
  return true;
}

RootMultiset sorted(RootMultiset r) {
  std::sort(r.begin(), r.end());
  return r;
}

RootMultiset dagger(const RootMultiset& r) {
  RootMultiset out;
  for (const auto& p : r) out.push_back(SpectralParam::C() * p.inverse());
  return sorted(out);
}

RootMultiset star(const RootMultiset& r) {
  RootMultiset out;
  for (const auto& p : r) out.push_back(p.inverse());
  return sorted(out);
}

RootMultiset rescale(const RootMultiset& r, SpectralParam s) {
  RootMultiset out;
  for (const auto& p : r) out.push_back(s * p);
  return sorted(out);
}

namespace {

RootMultiset join(RootMultiset a, const RootMultiset& b) {
  a.insert(a.end(), b.begin(), b.end());
  return sorted(a);
}

}  // namespace

GammaDescriptor gamma_iota(const EigenData& e, int i, int d) {
  GammaDescriptor g;
  g.node = i;
  g.d = d;
  auto get = [i](const std::map<int, RootMultiset>& m) {
    auto it = m.find(i);
    return it == m.end() ? RootMultiset{} : it->second;
  };
  RootMultiset Q = get(e.Q), R = get(e.R);
  g.Qt = join(rescale(Q, SpectralParam::C()), star(R));
  g.Qt_dagger = join(rescale(R, SpectralParam::C()), star(Q));
  RootMultiset num = join(rescale(g.Qt, SpectralParam::q(-d)), rescale(g.Qt_dagger, SpectralParam::q(d)));
  RootMultiset den = join(rescale(g.Qt, SpectralParam::q(d)), rescale(g.Qt_dagger, SpectralParam::q(-d)));
  std::set_difference(num.begin(), num.end(), den.begin(), den.end(), std::back_inserter(g.numerator));
  std::set_difference(den.begin(), den.end(), num.begin(), num.end(), std::back_inserter(g.denominator));
  return g;
}

}  // namespace iqg::qchar
