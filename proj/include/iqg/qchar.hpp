#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace iqg::qchar {

// a^ea q^eq C^eC as an exponent vector.
struct SpectralParam {
  int ea = 0, eq = 0, eC = 0;

  static SpectralParam a() { return {1, 0, 0}; }
  static SpectralParam q(int k) { return {0, k, 0}; }
  static SpectralParam C(int k = 1) { return {0, 0, k}; }

  SpectralParam operator*(const SpectralParam& o) const { return {ea + o.ea, eq + o.eq, eC + o.eC}; }
  SpectralParam inverse() const { return {-ea, -eq, -eC}; }
  auto operator<=>(const SpectralParam&) const = default;
  std::string to_string() const;
};

struct YMonomial {
  std::map<std::pair<int, SpectralParam>, int> exps;  // (node, parameter) -> exponent, never 0

  static YMonomial Y(int i, SpectralParam a, int e = 1);
  YMonomial operator*(const YMonomial& o) const;
  YMonomial inverse() const;
  bool is_one() const { return exps.empty(); }
  auto operator<=>(const YMonomial&) const = default;
  std::string to_string() const;
};

struct YPolynomial {
  std::map<YMonomial, long> terms;

  YPolynomial() = default;
  explicit YPolynomial(const YMonomial& m, long c = 1);
  static YPolynomial one() { return YPolynomial(YMonomial{}); }

  YPolynomial& operator+=(const YPolynomial& o);
  YPolynomial operator+(const YPolynomial& o) const;
  YPolynomial operator-(const YPolynomial& o) const;
  YPolynomial operator*(const YPolynomial& o) const;
  bool operator==(const YPolynomial& o) const = default;
  bool is_zero() const { return terms.empty(); }
  std::string to_string() const;
};

// Y_{i,a} -> Y_{i,Ca} Y_{i,a^{-1}}^{-1}, extended multiplicatively.
YMonomial y_twist(const YMonomial& m);
YPolynomial y_twist(const YPolynomial& p);

// Summands M_0..M_n of the q-character of the sl2 evaluation module W_n(a) (node 1).
std::vector<YMonomial> chi_q_monomials_sl2(int n, SpectralParam a);
YPolynomial chi_q_eval_sl2(int n, SpectralParam a);

// Summands of the boundary q-character, written out directly (no twist).
std::vector<YMonomial> boundary_monomials_sl2(int n, SpectralParam a);

struct BoundaryChi {
  YPolynomial value;     // the direct sum of the boundary monomials
  YPolynomial twisted;   // y_twist(chi_q_eval_sl2(n, a))
  bool agree() const { return value == twisted; }
};
BoundaryChi boundary_chi_eval_sl2(int n, SpectralParam a);

// q^{-2} C^{-1} a^{-1}: the parameter of the isomorphic q-Onsager module.
SpectralParam onsager_partner(SpectralParam a);

// Boundary monomial i at a against boundary monomial n-i at the partner parameter, for all i.
bool monomial_symmetry_check(int n, SpectralParam a);

// Polynomials with constant term 1 are stored by the parameters p of their factors (1 - z p).
using RootMultiset = std::vector<SpectralParam>;  // kept sorted

RootMultiset sorted(RootMultiset r);
// Zeros a -> C^{-1} a^{-1}; on factor parameters this is p -> C p^{-1}.
RootMultiset dagger(const RootMultiset& r);
// Zeros inverted; on factor parameters p -> p^{-1}.
RootMultiset star(const RootMultiset& r);
// P(C^k z).
RootMultiset rescale(const RootMultiset& r, SpectralParam s);

struct EigenData {
  std::map<int, RootMultiset> Q, R;  // per node i, parameters of Q_i and R_i
};

// gamma(z) = Qt(q_i^{-1}z) Qtd(q_i z) / (Qt(q_i z) Qtd(q_i^{-1}z)), up to the prefactor
// (1 - q_i^{-2} C z^2) / (1 - C z^2), which is recorded but not expanded.
struct GammaDescriptor {
  int node = 0;
  int d = 1;                // q_i = q^d
  RootMultiset Qt;          // Q_i(Cz) R_i^*(z)
  RootMultiset Qt_dagger;   // R_i(Cz) Q_i^*(z)
  RootMultiset numerator, denominator;  // cancelled against each other
  std::string prefactor = "(1 - q_i^{-2} C z^2)/(1 - C z^2)";
  bool trivial() const { return numerator.empty() && denominator.empty(); }
};
GammaDescriptor gamma_iota(const EigenData& e, int i, int d = 1);

}  // namespace iqg::qchar
