#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "iqg/iqg.hpp"

using namespace iqg;
using namespace iqg::alg;
using scalars::Scalar;
using weyl::Family;

namespace {

AlgElement g(const RootDatum* R, char c) { return AlgElement::gen(R, c); }
AlgElement te(const RootDatum* R, int j) { return tE<RationalFunc>(R, j); }
AlgElement bq(const RootDatum* R, int j) { return iq::eta(g(R, B(j))); }  // eta(B_j) inside U
Scalar qs(int k) { return Scalar::q_power(k); }

// Nodes i, j with a_ji = a.
std::vector<std::pair<int, int>> pairs_with(const RootDatum* R, int a) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < R->nodes(); ++i)
    for (int j = 0; j < R->nodes(); ++j)
      if (i != j && R->a(j, i) == a) out.emplace_back(i, j);
  return out;
}

// A path i_1 - i_2 - ... in the Dynkin diagram through simply laced edges.
std::vector<int> random_chain(const RootDatum* R, std::mt19937_64& rng, int len) {
  std::uniform_int_distribution<int> pick(0, R->nodes() - 1);
  std::vector<int> c = {pick(rng)};
  while (static_cast<int>(c.size()) < len) {
    std::vector<int> next;
    for (int j = 0; j < R->nodes(); ++j)
      if (std::find(c.begin(), c.end(), j) == c.end() && R->a(c.back(), j) * R->a(j, c.back()) == 1) next.push_back(j);
    if (next.empty()) break;
    c.push_back(next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)]);
  }
  return c;
}

// F_j, tE_j or eta(B_j), chosen at random.
AlgElement random_letter(const RootDatum* R, int j, std::mt19937_64& rng) {
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: return g(R, Fl(j));
    case 1: return te(R, j);
    default: return bq(R, j);
  }
}

}  // namespace

TEST_CASE("embedding of the B generators") {
  const RootDatum* A1 = datum(Family::A, 1);
  CHECK(iq::eta(g(A1, B(1))) == g(A1, Fl(1)) + te(A1, 1));
  CHECK(te(A1, 1) == AlgElement::monomial(A1, Monomial{std::string(1, E(1)), {}}, -(qs(-2) * Scalar::kk(1))) *
                         K<RationalFunc>(A1, 1, -1));
  const RootDatum* B2 = datum(Family::B, 2);
  // q_1 = q^2 on the long node.
  CHECK(te(B2, 1) == AlgElement::monomial(B2, Monomial{std::string(1, E(1)), {}}, -(qs(-4) * Scalar::kk(1))) *
                         K<RationalFunc>(B2, 1, -1));
  AlgElement p = g(B2, B(1)) * g(B2, B(2));
  CHECK(iq::eta(p) == bq(B2, 1) * bq(B2, 2));
}

TEST_CASE("defining relations of the iquantum group hold under the embedding") {
  for (auto [f, n] : {std::pair{Family::A, 2}, std::pair{Family::B, 2}, std::pair{Family::C, 2}, std::pair{Family::D, 4}}) {
    const RootDatum* R = datum(f, n);
    for (int i = 0; i < R->nodes(); ++i)
      for (int j = 0; j < R->nodes(); ++j) {
        if (i == j) continue;
        INFO(weyl::family_char(f), n, " i=", i, " j=", j);
        CHECK(uq::is_zero(iq::eta(iq::iquantum_relation<RationalFunc>(R, i, j))));
      }
  }
}

TEST_CASE("P_k and P'_k agree on almost commuting tuples") {
  std::mt19937_64 rng(2024);
  const RootDatum* Rs[] = {datum(Family::A, 3), datum(Family::D, 4), datum(Family::A, 4)};
  int done = 0;
  for (int t = 0; t < 100; ++t) {
    const RootDatum* R = Rs[t % 3];
    auto chain = random_chain(R, rng, 2 + t % 3);
    std::vector<AlgElement> y;
    for (int j : chain) y.push_back(random_letter(R, j, rng));
    Scalar c = qs(std::uniform_int_distribution<int>(-2, 2)(rng));
    CHECK(uq::equal_mod_relations(iq::P(y, c), iq::Pprime(y, c)));
    ++done;
  }
  CHECK(done == 100);
  // Without almost commutativity the two orders differ.
  const RootDatum* A2 = datum(Family::A, 2);
  std::vector<AlgElement> y = {g(A2, Fl(1)), g(A2, Fl(2)), g(A2, Fl(0))};
  CHECK_FALSE(uq::equal_mod_relations(iq::P(y, qs(1)), iq::Pprime(y, qs(1))));
}

TEST_CASE("P_k is invariant under swapping commuting neighbours") {
  std::mt19937_64 rng(99);
  const RootDatum* R = datum(Family::D, 4);
  for (int t = 0; t < 100; ++t) {
    // 1, 3, 4 pairwise commute; 2 is adjacent to all of them.
    std::vector<int> leaves = {1, 3, 4};
    std::shuffle(leaves.begin(), leaves.end(), rng);
    std::vector<AlgElement> y = {random_letter(R, leaves[0], rng), random_letter(R, leaves[1], rng),
                                 random_letter(R, 2, rng)};
    std::vector<AlgElement> z = {y[1], y[0], y[2]};
    CHECK(uq::equal_mod_relations(iq::P(y, qs(1)), iq::P(z, qs(1))));
  }
}

TEST_CASE("subterm decomposition") {
  const RootDatum* A2 = datum(Family::A, 2);
  AlgElement p = g(A2, B(2)) * g(A2, B(2)) * g(A2, B(1));
  auto parts = iq::subterm_decompose(p);
  CHECK(parts.size() == 6);
  iq::SubtermType t(3, {0, 0});
  t[2] = {0, 2};
  t[1] = {0, 1};
  REQUIRE(parts.count(t));
  CHECK(parts.at(t) == uq::triangular_form(g(A2, Fl(2)) * g(A2, Fl(2)) * g(A2, Fl(1))));
  t[2] = {1, 1};
  CHECK(iq::is_mixed(t));
  CHECK(iq::type_to_string(t) == "f1^1 e2^1 f2^1");
}

TEST_CASE("subterms add up to the embedded polynomial") {
  std::mt19937_64 rng(5);
  const RootDatum* Rs[] = {datum(Family::A, 2), datum(Family::B, 2), datum(Family::C, 2)};
  for (int t = 0; t < 100; ++t) {
    const RootDatum* R = Rs[t % 3];
    std::uniform_int_distribution<int> node(0, R->rank()), len(1, 3), coef(-3, 3);
    AlgElement p(R);
    for (int k = 0; k < 2; ++k) {
      std::string w;
      for (int l = len(rng); l > 0; --l) w += B(node(rng));
      p += AlgElement::monomial(R, Monomial{w, {}}, Scalar(coef(rng)) * qs(coef(rng)));
    }
    AlgElement sum(R);
    for (const auto& [ty, x] : iq::subterm_decompose(p)) sum += x;
    CHECK(uq::equal_mod_relations(sum, iq::eta(p)));
  }
}

TEST_CASE("canonical B-polynomials") {
  const RootDatum* A2 = datum(Family::A, 2);
  AlgElement p = g(A2, B(1)) * g(A2, B(2)) - (g(A2, B(2)) * g(A2, B(1))).scaled(qs(1));
  AlgElement c = iq::reduce_B(p);
  CHECK(uq::equal_mod_relations(iq::eta(c), iq::eta(p)));
  CHECK(iq::reduce_B(c) == c);
  // The iquantum Serre relation reduces to zero.
  CHECK(iq::reduce_B(iq::iquantum_relation<RationalFunc>(A2, 1, 2)).is_zero());
  CHECK_THROWS_AS(iq::lift_to_B(g(A2, E(1))), std::invalid_argument);
}

TEST_CASE("nested brackets on simply laced pairs") {
  for (auto [f, n] : {std::pair{Family::A, 2}, std::pair{Family::A, 3}, std::pair{Family::B, 2}, std::pair{Family::C, 2},
                      std::pair{Family::D, 4}}) {
    const RootDatum* R = datum(f, n);
    for (auto [i, j] : pairs_with(R, -1)) {
      INFO(weyl::family_char(f), n, " i=", i, " j=", j);
      int d = R->d(i);
      CHECK(uq::is_zero(qcomm(g(R, Fl(j)), te(R, i), d)));
      CHECK(uq::equal_mod_relations(braid::lusztig_T(weyl::s(i), g(R, Fl(j))), qcomm(g(R, Fl(j)), g(R, Fl(i)), d)));
      CHECK(uq::equal_mod_relations(braid::lusztig_T(weyl::s(i), te(R, j)), qcomm(te(R, j), te(R, i), d)));
    }
  }
}

TEST_CASE("two-step QSP images on doubly laced pairs") {
  for (auto f : {Family::B, Family::C}) {
    const RootDatum* R = datum(f, 2);
    for (int a : {-2, -1}) {
      int seen = 0;
      for (auto [i, j] : pairs_with(R, a)) {
        if (R->a(i, j) * R->a(j, i) != 2) continue;
        ++seen;
        INFO(weyl::family_char(f), "2 i=", i, " j=", j, " a_ji=", a);
        weyl::Word w = {weyl::s(j), weyl::s(i)};
        AlgElement lhs = iq::eta(braid::qsp_T_word_naive(w, g(R, B(j))));
        AlgElement F_T = braid::lusztig_T(weyl::s(j), braid::lusztig_T(weyl::s(i), g(R, Fl(j))));
        AlgElement E_T = braid::lusztig_T(weyl::s(j), braid::lusztig_T(weyl::s(i), te(R, j)));
        if (a == -2) {
          CHECK(uq::equal_mod_relations(lhs, iq::eta(iq::boldP(R, i, g(R, B(j)), g(R, B(i))))));
          CHECK(uq::equal_mod_relations(E_T, iq::hatP(R, i, te(R, j), te(R, i))));
          CHECK(uq::equal_mod_relations(E_T, iq::boldP(R, i, te(R, j), bq(R, i))));
          CHECK(uq::equal_mod_relations(F_T, iq::hatP(R, i, g(R, Fl(j)), g(R, Fl(i)))));
        } else {
          CHECK(uq::equal_mod_relations(lhs, iq::eta(qcomm(g(R, B(i)), g(R, B(j)), 2))));
          CHECK(uq::equal_mod_relations(E_T, qcomm(te(R, i), te(R, j), 2)));
          CHECK(uq::equal_mod_relations(E_T, qcomm(bq(R, i), te(R, j), 2)));
          CHECK(uq::equal_mod_relations(F_T, qcomm(g(R, Fl(i)), g(R, Fl(j)), 2)));
        }
      }
      CHECK(seen > 0);
    }
  }
}

TEST_CASE("reduced QSP word action agrees with plain composition") {
  for (auto [f, n, text] : {std::tuple{Family::A, 2, "s1 s2"}, std::tuple{Family::B, 2, "s0 s2 s1"},
                            std::tuple{Family::C, 2, "s2 s1"}, std::tuple{Family::A, 2, "pi1 s0 s1"}}) {
    const RootDatum* R = datum(f, n);
    weyl::Word w = weyl::parse_word(text);
    for (int j = 0; j <= n; ++j) {
      INFO(text, " B", j);
      auto r = iq::qsp_T_word_reduced(w, g(R, B(j)));
      AlgElement naive = iq::eta(braid::qsp_T_word_naive(w, g(R, B(j))));
      CHECK(uq::equal_mod_relations(r.image, naive));
      CHECK(uq::equal_mod_relations(iq::eta(r.poly), naive));
    }
  }
}

TEST_CASE("closed forms of the fundamental-weight images") {
  for (auto [f, n] : {std::pair{Family::A, 2}, std::pair{Family::A, 3}, std::pair{Family::B, 2}, std::pair{Family::C, 2}}) {
    const RootDatum* R = datum(f, n);
    for (int i = 1; i <= n; ++i) {
      INFO(weyl::family_char(f), n, " i=", i, " ", iq::omega_prime_expr(*R, i).to_string());
      AlgElement closed = iq::omega_prime_polynomial<RationalFunc>(R, i);
      CHECK(uq::equal_mod_relations(iq::eta_of_qsp_image<RationalFunc>(R, i), iq::eta(closed)));
    }
  }
  CHECK(iq::omega_prime_expr(*datum(Family::A, 3), 2).to_string() == "P_2(B_1, P_2(B_3, B_0))");
}

TEST_CASE("closed forms in type D, probabilistic") {
  scalars::ScopedPoint sp(Fp::raw(1000003ULL));
  const RootDatum* D4 = datum(Family::D, 4);
  for (int i = 1; i <= 4; ++i) {
    INFO("D4 i=", i);
    AlgElementP closed = iq::omega_prime_polynomial<Fp>(D4, i);
    CHECK(uq::equal_mod_relations(iq::eta_of_qsp_image<Fp>(D4, i), iq::eta(closed)));
  }
}

TEST_CASE("goodness, weak compatibility and Q_i") {
  for (auto [f, n] : {std::pair{Family::A, 2}, std::pair{Family::B, 2}, std::pair{Family::C, 2}}) {
    const RootDatum* R = datum(f, n);
    for (int i = 1; i <= n; ++i) {
      INFO(weyl::family_char(f), n, " i=", i);
      AlgElement p = iq::omega_prime_polynomial<RationalFunc>(R, i);
      auto rep = iq::check_i_good(p, i, true);
      CHECK(rep.mixed_vanish.pass);
      CHECK(rep.degree_bound.pass);
      CHECK(rep.p_plus.pass);
      CHECK(rep.p_minus_minus.pass);
      CHECK(rep.pass());
      CHECK(iq::weak_compat_check<RationalFunc>(R, i).pass);
      AlgElement q = iq::extract_Qi(p, i);
      CHECK(uq::in_positive_subalgebra(q, uq::Positivity::d_at_least(i, 1)));
    }
  }
}

TEST_CASE("goodness fails for a corrupted polynomial") {
  const RootDatum* A2 = datum(Family::A, 2);
  // Bracket parameter q^{-1} instead of q.
  AlgElement bad = qcomm(g(A2, B(2)), g(A2, B(0)), -1);
  auto rep = iq::check_i_good(bad, 1);
  CHECK_FALSE(rep.pass());
  CHECK_THROWS_AS(iq::extract_Qi(bad, 1), std::invalid_argument);
  // No B_0 letter at all.
  CHECK_THROWS_AS(iq::check_i_good(g(A2, B(2)), 1), std::invalid_argument);
  CHECK_FALSE(uq::in_positive_subalgebra(g(A2, Fl(1)), uq::Positivity::d_at_least(1, 1)));
}

TEST_CASE("type D identities") {
  scalars::ScopedPoint sp(Fp::raw(1000003ULL));
  for (int n : {4, 5}) {
    auto res = iq::verify_type_d_identities<Fp>(datum(Family::D, n));
    CHECK(res.size() == static_cast<std::size_t>(n - 1));
    for (const auto& r : res) {
      INFO("D", n, " ", r.name, ": ", r.detail);
      CHECK(r.pass);
    }
  }
  CHECK_THROWS_AS(iq::verify_type_d_identities<Fp>(datum(Family::A, 3)), std::invalid_argument);
}
