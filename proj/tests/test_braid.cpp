#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "iqg/braid.hpp"

using namespace iqg;
using namespace iqg::alg;
using scalars::LaurentPoly;
using scalars::Scalar;
using weyl::Family;
using weyl::Word;

namespace {

AlgElement g(const RootDatum* R, char c) { return AlgElement::gen(R, c); }
Scalar qs(int k) { return Scalar::q_power(k); }

std::vector<char> generators(const RootDatum* R) {
  std::vector<char> out;
  for (int i = 0; i <= R->rank(); ++i) {
    out.push_back(E(i));
    out.push_back(Fl(i));
  }
  return out;
}

AlgElement cartan(const RootDatum* R, int i) {
  int d = R->d(i);
  Scalar inv(RationalFunc(LaurentPoly::q_power(d) - LaurentPoly::q_power(-d)).inverse());
  return (K<RationalFunc>(R, i) - K<RationalFunc>(R, i, -1)).scaled(inv);
}

// Letter by letter, reducing after each step.
AlgElement compose(const Word& w, const AlgElement& x) {
  AlgElement y = x;
  for (auto it = w.rbegin(); it != w.rend(); ++it) y = uq::normal_form(braid::lusztig_T(*it, y));
  return y;
}

AlgElement eta(const AlgElement& p) {
  const RootDatum* R = p.datum();
  Hom<RationalFunc> h;
  h.letter = [R](char c) { return g(R, Fl(node(c))) + tE<RationalFunc>(R, node(c)); };
  return apply_hom(h, p);
}

}  // namespace

TEST_CASE("Lusztig automorphism on single generators") {
  const RootDatum* A1 = datum(Family::A, 1);
  CHECK(braid::lusztig_T(weyl::s(1), g(A1, E(1))) == -(g(A1, Fl(1)) * K<RationalFunc>(A1, 1)));
  CHECK(braid::lusztig_T(weyl::s(1), g(A1, Fl(1))) == -(K<RationalFunc>(A1, 1, -1) * g(A1, E(1))));
  CHECK(braid::lusztig_T(weyl::s(1), K<RationalFunc>(A1, 1)) == K<RationalFunc>(A1, 1, -1));
  const RootDatum* A2 = datum(Family::A, 2);
  CHECK(braid::lusztig_T(weyl::s(1), g(A2, E(2))) == g(A2, E(1)) * g(A2, E(2)) - (g(A2, E(2)) * g(A2, E(1))).scaled(qs(-1)));
  CHECK(braid::lusztig_T(weyl::s(1), g(A2, Fl(2))) == g(A2, Fl(2)) * g(A2, Fl(1)) - (g(A2, Fl(1)) * g(A2, Fl(2))).scaled(qs(1)));
  // Central elements move by the reflection: s_1(alpha_2) = alpha_1 + alpha_2.
  AlgElement kk2 = KK<RationalFunc>(A2, 2);
  CHECK(braid::lusztig_T(weyl::s(1), kk2) == KK<RationalFunc>(A2, 1) * kk2);
  CHECK(braid::lusztig_T(weyl::s(2), kk2) == KK<RationalFunc>(A2, 2, -1));
}

TEST_CASE("Lusztig automorphism preserves the defining relations") {
  for (auto [f, n] : {std::pair{Family::A, 2}, std::pair{Family::B, 2}, std::pair{Family::C, 2}}) {
    const RootDatum* R = datum(f, n);
    for (int l = 0; l <= n; ++l) {
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
          AlgElement c = g(R, E(i)) * g(R, Fl(j)) - g(R, Fl(j)) * g(R, E(i));
          if (i == j) c -= cartan(R, i);
          CHECK(uq::is_zero(braid::lusztig_T(weyl::s(l), c)));
          if (i != j) CHECK(uq::is_zero(braid::lusztig_T(weyl::s(l), uq::serre_poly<RationalFunc>(R, i, j, Kind::E))));
        }
    }
  }
}

TEST_CASE("braid relations hold modulo relations") {
  const RootDatum* A2 = datum(Family::A, 2);
  Word a = {weyl::s(1), weyl::s(2), weyl::s(1)}, b = {weyl::s(2), weyl::s(1), weyl::s(2)};
  for (char c : generators(A2)) CHECK(uq::equal_mod_relations(compose(a, g(A2, c)), compose(b, g(A2, c))));
  const RootDatum* B2 = datum(Family::B, 2);
  Word a4 = {weyl::s(1), weyl::s(2), weyl::s(1), weyl::s(2)}, b4 = {weyl::s(2), weyl::s(1), weyl::s(2), weyl::s(1)};
  for (char c : {E(1), Fl(2), E(0)}) CHECK(uq::equal_mod_relations(compose(a4, g(B2, c)), compose(b4, g(B2, c))));
}

TEST_CASE("diagram automorphisms conjugate reflections") {
  const RootDatum* A2 = datum(Family::A, 2);
  for (int i = 0; i <= 2; ++i) {
    int pi_i = A2->pi_perm(1)[i];
    Word lhs = {weyl::pi(1), weyl::s(i)}, rhs = {weyl::s(pi_i), weyl::pi(1)};
    for (char c : generators(A2)) CHECK(uq::equal_mod_relations(compose(lhs, g(A2, c)), compose(rhs, g(A2, c))));
  }
}

TEST_CASE("word action with the simple-root shortcut matches plain composition") {
  for (auto [f, n, text] : {std::tuple{Family::A, 2, "s0 s1 s2"}, std::tuple{Family::B, 2, "s0 s2 s1"},
                            std::tuple{Family::C, 2, "s1 s2 s1"}, std::tuple{Family::A, 3, "pi1 s0 s1 s2"}}) {
    const RootDatum* R = datum(f, n);
    Word w = weyl::parse_word(text);
    REQUIRE(weyl::is_reduced(*R, w));
    for (char c : generators(R)) {
      INFO(weyl::word_to_string(w), " ", letter_name(c));
      CHECK(uq::equal_mod_relations(braid::lusztig_T_word(w, g(R, c)), compose(w, g(R, c))));
    }
  }
  const RootDatum* A2 = datum(Family::A, 2);
  CHECK_THROWS_AS(braid::lusztig_T_word(weyl::parse_word("s1 s1"), g(A2, E(1))), std::invalid_argument);
}

TEST_CASE("QSP braid operators on single letters") {
  const RootDatum* A2 = datum(Family::A, 2);
  CHECK(braid::qsp_T(weyl::s(1), g(A2, B(1))) == AlgElement::gen(A2, B(1), Scalar::kk(1, -1)));
  CHECK(braid::qsp_T(weyl::s(1), g(A2, B(2))) == g(A2, B(2)) * g(A2, B(1)) - (g(A2, B(1)) * g(A2, B(2))).scaled(qs(1)));
  const RootDatum* A3 = datum(Family::A, 3);
  CHECK(braid::qsp_T(weyl::s(1), g(A3, B(3))) == g(A3, B(3)));
  CHECK(braid::qsp_T(weyl::pi(1), g(A3, B(0))) == g(A3, B(A3->pi_perm(1)[0])));
  CHECK_THROWS_AS(braid::qsp_T(weyl::s(1), g(A3, E(1))), std::invalid_argument);
}

TEST_CASE("QSP word action: shortcut agrees with naive composition under the embedding") {
  for (auto [f, n, text] : {std::tuple{Family::A, 2, "s1 s2"}, std::tuple{Family::A, 3, "s1 s2 s3"},
                            std::tuple{Family::C, 2, "s2 s1"}, std::tuple{Family::D, 4, "s1 s2 s3"},
                            std::tuple{Family::A, 2, "pi1 s0 s1"}}) {
    const RootDatum* R = datum(f, n);
    Word w = weyl::parse_word(text);
    REQUIRE(weyl::is_reduced(*R, w));
    for (int j = 0; j <= n; ++j) {
      INFO(text, " B", j);
      AlgElement fast = braid::qsp_T_word(w, g(R, B(j)));
      AlgElement naive = braid::qsp_T_word_naive(w, g(R, B(j)));
      CHECK(uq::equal_mod_relations(eta(fast), eta(naive)));
    }
  }
}
