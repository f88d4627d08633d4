#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "iqg/qchar.hpp"

using namespace iqg::qchar;

namespace {

const SpectralParam a = SpectralParam::a();
SpectralParam aq(int k) { return a * SpectralParam::q(k); }
YPolynomial Y(SpectralParam p, int e = 1) { return YPolynomial(YMonomial::Y(1, p, e)); }

}  // namespace

TEST_CASE("twist on letters") {
  CHECK(y_twist(Y(a)) == Y(SpectralParam::C() * a) * Y(a.inverse(), -1));
  CHECK(y_twist(YPolynomial::one()) == YPolynomial::one());
  YPolynomial lhs = y_twist(Y(a) * Y(a.inverse()));
  YPolynomial rhs = Y(SpectralParam::C() * a) * Y(SpectralParam::C() * a.inverse()) * Y(a.inverse(), -1) * Y(a, -1);
  CHECK(lhs == rhs);
}

TEST_CASE("twist is multiplicative") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> e(-3, 3), node(1, 3);
  auto random_monomial = [&] {
    YMonomial m;
    for (int k = 0; k < 4; ++k) m = m * YMonomial::Y(node(rng), {e(rng), e(rng), e(rng)}, e(rng));
    return m;
  };
  for (int t = 0; t < 200; ++t) {
    YMonomial x = random_monomial(), y = random_monomial();
    CHECK(y_twist(x * y) == y_twist(x) * y_twist(y));
  }
}

TEST_CASE("sl2 evaluation q-characters") {
  CHECK(chi_q_eval_sl2(0, a) == YPolynomial::one());
  CHECK(chi_q_eval_sl2(1, a) == Y(a) + Y(aq(2), -1));
  CHECK(chi_q_eval_sl2(2, a) == Y(aq(-1)) * Y(aq(1)) + Y(aq(-1)) * Y(aq(3), -1) + Y(aq(1), -1) * Y(aq(3), -1));
  // Highest monomial first, lowest last.
  auto m = chi_q_monomials_sl2(3, a);
  CHECK(m.front() == YMonomial::Y(1, aq(-2)) * YMonomial::Y(1, aq(0)) * YMonomial::Y(1, aq(2)));
  CHECK(m.back() == (YMonomial::Y(1, aq(0)) * YMonomial::Y(1, aq(2)) * YMonomial::Y(1, aq(4))).inverse());
}

TEST_CASE("boundary q-character: direct sum against twisted q-character") {
  CHECK(boundary_chi_eval_sl2(0, a).value == YPolynomial::one());
  auto b1 = boundary_chi_eval_sl2(1, a);
  SpectralParam C = SpectralParam::C();
  CHECK(b1.value == Y(C * a) * Y(a.inverse(), -1) + Y(a.inverse() * SpectralParam::q(-2)) * Y(C * aq(2), -1));
  for (int n = 0; n <= 12; ++n) {
    auto b = boundary_chi_eval_sl2(n, a);
    CHECK(b.agree());
    CHECK(b.value.terms.size() == static_cast<std::size_t>(n + 1));
  }
}

TEST_CASE("q-Onsager symmetry") {
  CHECK(onsager_partner(onsager_partner(a)) == a);
  for (int n = 0; n <= 12; ++n) {
    CHECK(monomial_symmetry_check(n, a));
    CHECK(boundary_chi_eval_sl2(n, a).value == boundary_chi_eval_sl2(n, onsager_partner(a)).value);
  }
  // The ordinary q-character does not have this symmetry.
  CHECK(chi_q_eval_sl2(1, a) != chi_q_eval_sl2(1, onsager_partner(a)));
}

TEST_CASE("gamma series root data") {
  GammaDescriptor g0 = gamma_iota(EigenData{}, 1);
  CHECK(g0.Qt.empty());
  CHECK(g0.Qt_dagger.empty());
  CHECK(g0.trivial());

  EigenData e;
  e.Q[1] = {a};
  GammaDescriptor g = gamma_iota(e, 1);
  CHECK(g.Qt == RootMultiset{SpectralParam::C() * a});
  CHECK(g.Qt_dagger == RootMultiset{a.inverse()});
  CHECK(dagger(g.Qt) == g.Qt_dagger);
  CHECK(g.numerator.size() == 2);
  CHECK(g.denominator.size() == 2);

  RootMultiset r = {a, aq(3), SpectralParam::C(2) * aq(-1)};
  CHECK(dagger(dagger(r)) == sorted(r));
  CHECK(star(star(r)) == sorted(r));
}

TEST_CASE("gamma data under exchange of Q and R") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(-3, 3), len(0, 3);
  for (int t = 0; t < 100; ++t) {
    EigenData x, y;
    for (int k = len(rng); k > 0; --k) x.Q[1].push_back({e(rng), e(rng), e(rng)});
    for (int k = len(rng); k > 0; --k) x.R[1].push_back({e(rng), e(rng), e(rng)});
    y.Q = x.R;
    y.R = x.Q;
    GammaDescriptor gx = gamma_iota(x, 1), gy = gamma_iota(y, 1);
    CHECK(dagger(gx.Qt) == gy.Qt);
    CHECK(gx.Qt_dagger == gy.Qt);
    CHECK(dagger(gx.Qt) == gx.Qt_dagger);
  }
}
