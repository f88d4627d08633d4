#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <deque>
#include <random>
#include <unordered_map>

#include "iqg/weyl.hpp"

using namespace iqg::weyl;

namespace {

struct MapHash {
  std::size_t operator()(const AffineMap& m) const { return m.hash(); }
};

Word random_word(const RootDatum& R, std::mt19937_64& rng, int len, bool with_pi) {
  std::uniform_int_distribution<int> node(0, R.rank());
  auto special = R.special_nodes();
  Word w;
  for (int t = 0; t < len; ++t) {
    if (with_pi && !special.empty() && rng() % 5 == 0)
      w.push_back(pi(special[rng() % special.size()]));
    else
      w.push_back(s(node(rng)));
  }
  return w;
}

std::vector<RootDatum> small_data() {
  return {RootDatum::make(Family::A, 1), RootDatum::make(Family::A, 3), RootDatum::make(Family::B, 2),
          RootDatum::make(Family::B, 3), RootDatum::make(Family::C, 2), RootDatum::make(Family::C, 3),
          RootDatum::make(Family::D, 4), RootDatum::make(Family::D, 5)};
}

}  // namespace

TEST_CASE("Cartan matrices follow the Bourbaki convention") {
  RootDatum b3 = RootDatum::make(Family::B, 3);
  CHECK(b3.a(2, 3) == -2);
  CHECK(b3.a(3, 2) == -1);
  CHECK(b3.a(0, 2) == -1);
  CHECK(b3.a(0, 1) == 0);
  CHECK(b3.d(3) == 1);
  CHECK(b3.d(1) == 2);
  RootDatum c3 = RootDatum::make(Family::C, 3);
  CHECK(c3.a(3, 2) == -2);
  CHECK(c3.a(2, 3) == -1);
  CHECK(c3.a(1, 0) == -1);
  CHECK(c3.a(0, 1) == -2);
  CHECK(c3.d(0) == 2);
  RootDatum a1 = RootDatum::make(Family::A, 1);
  CHECK(a1.a(0, 1) == -2);
  RootDatum d5 = RootDatum::make(Family::D, 5);
  CHECK(d5.a(3, 5) == -1);
  CHECK(d5.a(4, 5) == 0);
  CHECK(d5.a(0, 2) == -1);
  CHECK(d5.delta() == std::vector<int>{1, 1, 2, 2, 1, 1});
  CHECK(RootDatum::make(Family::B, 3).delta() == std::vector<int>{1, 1, 2, 2});
  CHECK(RootDatum::make(Family::C, 3).delta() == std::vector<int>{1, 2, 2, 1});
  CHECK_THROWS(RootDatum::make(Family::D, 3));
}

TEST_CASE("positive root counts") {
  CHECK(RootDatum::make(Family::A, 4).finite_positive_roots().size() == 10);
  CHECK(RootDatum::make(Family::B, 3).finite_positive_roots().size() == 9);
  CHECK(RootDatum::make(Family::C, 4).finite_positive_roots().size() == 16);
  CHECK(RootDatum::make(Family::D, 5).finite_positive_roots().size() == 20);
}

TEST_CASE("fundamental group tables agree with t(omega_j) w_j w_0") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = (f == Family::D ? 4 : (f == Family::A ? 1 : 2)); n <= 7; ++n) {
      RootDatum R = RootDatum::make(f, n);
      for (int j : R.special_nodes()) {
        CAPTURE(R.name());
        CAPTURE(j);
        const auto& p = R.pi_perm(j);
        AffineMap m = letter_map(R, pi(j));
        for (int k = 0; k <= n; ++k) {
          CHECK(map_on_root(R, m, R.simple(k)) == R.simple(p[k]));
          for (int l = 0; l <= n; ++l) CHECK(R.a(p[k], p[l]) == R.a(k, l));
          // pi s_k pi^{-1} = s_{pi(k)}
          CHECK(m * letter_map(R, s(k)) * m.inverse() == letter_map(R, s(p[k])));
        }
      }
    }
  // Type A: pi_i = pi_1^i.
  RootDatum a4 = RootDatum::make(Family::A, 4);
  for (int i = 1; i <= 4; ++i) CHECK(affine_action(a4, power({pi(1)}, i)) == letter_map(a4, pi(i)));
  // Odd D: the fundamental group is cyclic of order four.
  RootDatum d5 = RootDatum::make(Family::D, 5);
  CHECK(affine_action(d5, {pi(5), pi(5)}) == letter_map(d5, pi(1)));
  CHECK(affine_action(d5, {pi(5), pi(4)}).is_translation());
  CHECK(affine_action(d5, {pi(5), pi(4)}) == AffineMap::identity(5));
}

TEST_CASE("word notation") {
  CHECK(word_to_string(seg(2, 5)) == "s2 s3 s4 s5");
  CHECK(word_to_string(seg(5, 2)) == "s5 s4 s3 s2");
  CHECK(parse_word("pi1 [1,3] s0") == concat({{pi(1)}, seg(1, 3), {s(0)}}));
  CHECK_THROWS(parse_word("x3"));
  RootDatum a3 = RootDatum::make(Family::A, 3);
  CHECK(word_to_string(fundamental_weight_word(a3, 1)) == "pi1 s3 s2 s1");
  RootDatum c3 = RootDatum::make(Family::C, 3);
  CHECK(fundamental_weight_word(c3, 3) == parse_word("pi3 s3 [2,3] [1,3]"));
  RootDatum d4 = RootDatum::make(Family::D, 4);
  // pi_4 r_2 s_4 with r_2 = s_4 [2,3][1,2]
  CHECK(fundamental_weight_word(d4, 4) == parse_word("pi4 s4 [2,3] [1,2] s4"));
  CHECK(zeta_word(c3, 2) == parse_word("[0,3] [0,3]"));
  CHECK(zeta_word(RootDatum::make(Family::B, 3), 1) == parse_word("pi1 [1,3]"));
  CHECK(tau_word(3, 1) == parse_word("s3 s2"));
  CHECK(tau_word(3, 2) == parse_word("[2,3] s1"));
  CHECK(tau_word(4, 4).empty() == false);
  CHECK_THROWS(fundamental_weight_word(d4, 5));
}

TEST_CASE("root action: letters versus affine maps, delta fixed") {
  std::mt19937_64 rng(5);
  for (const RootDatum& R : small_data()) {
    RootVec delta = R.delta();
    for (int t = 0; t < 40; ++t) {
      Word w = random_word(R, rng, 8, true);
      CHECK(act_on_root(R, w, delta) == delta);
      AffineMap m = affine_action(R, w);
      for (int k = 0; k <= R.rank(); ++k) CHECK(map_on_root(R, m, R.simple(k)) == act_on_root(R, w, R.simple(k)));
      CHECK(m * m.inverse() == AffineMap::identity(R.rank()));
    }
  }
  CHECK(act_on_root(RootDatum::make(Family::A, 2), {}, RootVec{0, 1, 0}) == RootVec{0, 1, 0});
}

TEST_CASE("length: descent count, alcove count and word independence") {
  std::mt19937_64 rng(9);
  for (const RootDatum& R : small_data()) {
    for (int t = 0; t < 60; ++t) {
      Word w = random_word(R, rng, 10, true);
      int len = length(R, w);
      CHECK(len == alcove_length(R, affine_action(R, w)));
      // Equal group element, different word: insert s_k s_k and move a pi letter across.
      Word v = w;
      int k = static_cast<int>(rng() % R.nodes());
      v.insert(v.begin() + static_cast<long>(rng() % (v.size() + 1)), {s(k), s(k)});
      for (std::size_t p = 0; p + 1 < v.size(); ++p) {
        if (v[p].is_pi && !v[p + 1].is_pi) {
          int img = R.pi_perm(v[p].index)[v[p + 1].index];
          Letter piv = v[p];
          v[p] = s(img);
          v[p + 1] = piv;
          ++p;
        }
      }
      REQUIRE(affine_action(R, v) == affine_action(R, w));
      CHECK(length(R, v) == len);
    }
  }
  RootDatum a2 = RootDatum::make(Family::A, 2);
  CHECK(length(a2, {}) == 0);
  CHECK_FALSE(is_reduced(a2, {s(1), s(1)}));
  CHECK(is_reduced(a2, {s(1), s(2), s(1)}));
}

TEST_CASE("reducedness matches breadth-first search in affine D4") {
  RootDatum R = RootDatum::make(Family::D, 4);
  const int depth = 12;
  std::unordered_map<AffineMap, int, MapHash> dist;
  std::deque<AffineMap> frontier{AffineMap::identity(4)};
  dist[frontier.front()] = 0;
  std::vector<AffineMap> gens;
  for (int i = 0; i <= 4; ++i) gens.push_back(letter_map(R, s(i)));
  while (!frontier.empty()) {
    AffineMap g = frontier.front();
    frontier.pop_front();
    int dg = dist[g];
    if (dg == depth) continue;
    for (const AffineMap& sgen : gens) {
      AffineMap h = g * sgen;
      if (dist.emplace(h, dg + 1).second) frontier.push_back(h);
    }
  }
  std::mt19937_64 rng(17);
  int reduced_seen = 0;
  for (int t = 0; t < 300; ++t) {
    Word w = random_word(R, rng, 12, false);
    AffineMap m = affine_action(R, w);
    REQUIRE(dist.count(m));
    CHECK(dist[m] == length(R, w));
    CHECK(is_reduced(R, w) == (dist[m] == 12));
    reduced_seen += is_reduced(R, w);
  }
  CHECK(reduced_seen > 0);
}

TEST_CASE("fundamental weight words") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = (f == Family::D ? 4 : (f == Family::A ? 1 : 2)); n <= 6; ++n) {
      RootDatum R = RootDatum::make(f, n);
      for (int i = 1; i <= n; ++i) {
        CAPTURE(R.name());
        CAPTURE(i);
        WeightWordCase c = verify_weight_word(R, i);
        CHECK(c.reduced);
        CHECK(c.translation);
        CHECK(c.length == coefficient_sum(R, i));
        CHECK(c.length == alcove_length(R, affine_action(R, fundamental_weight_word(R, i))));
        if (f == Family::C && i < n) {
          // The length is i(2n-i+1), which differs from the stated i(n+1).
          CHECK(c.length == i * (2 * n - i + 1));
          CHECK(c.length != c.stated);
        } else {
          CHECK(c.length == c.stated);
        }
        Word wp = omega_prime_word(R, i);
        CHECK(s_count(wp) == c.letters - 1);
      }
    }
  // A corrupted word (s_1 doubled) is not reduced.
  RootDatum b3 = RootDatum::make(Family::B, 3);
  Word w = fundamental_weight_word(b3, 2);
  w.push_back(s(1));
  w.push_back(s(1));
  CHECK_FALSE(is_reduced(b3, w));
}

TEST_CASE("omega prime factors through zeta") {
  for (int n = 4; n <= 7; ++n) {
    RootDatum R = RootDatum::make(Family::D, n);
    for (int i = 1; i <= n - 2; ++i)
      CHECK(omega_prime_word(R, i) == concat({zeta_word(R, i), tau_word(n - 1, i)}));
    CHECK(omega_prime_word(R, n - 1) == concat({zeta_word(R, n - 1), seg(1, n - 2)}));
    CHECK(omega_prime_word(R, n) == concat({zeta_word(R, n), seg(1, n - 2)}));
  }
  for (int n = 2; n <= 6; ++n) {
    RootDatum B = RootDatum::make(Family::B, n), C = RootDatum::make(Family::C, n);
    for (int i = 1; i < n; ++i) CHECK(omega_prime_word(B, i) == concat({zeta_word(B, i), tau_word(n - 1, i)}));
    for (int i = 1; i < n; ++i) CHECK(omega_prime_word(C, i) == concat({zeta_word(C, i), tau_word(n - 1, i)}));
  }
}

TEST_CASE("orbit lemmas") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = (f == Family::D ? 4 : 2); n <= 7; ++n) {
      RootDatum R = RootDatum::make(f, n);
      for (const CaseResult& c : verify_orbit_lemmas(R)) {
        CAPTURE(c.label);
        CAPTURE(c.detail);
        bool odd_d = f == Family::D &&
                     (c.label.find(" Y.") != std::string::npos || c.label.find(" zeta_1.") != std::string::npos ||
                      c.label.find(" zeta_3.") != std::string::npos || c.label.find(" zeta_5.") != std::string::npos);
        if (!odd_d || c.pass) {
          CHECK(c.pass);
          continue;
        }
        // With the Bourbaki pi_1 the odd-i identities hold after exchanging alpha_{n-1} and alpha_n.
        RootVec swapped = c.expected;
        std::swap(swapped[n - 1], swapped[n]);
        CHECK(c.got == swapped);
      }
    }
  RootDatum d4 = RootDatum::make(Family::D, 4);
  CHECK(act_on_root(d4, parse_word("s0 [2,3] [1,2] s4"), d4.simple(0)) == RootVec{1, 1, 2, 1, 0});
  // B3: zeta_2.alpha_1 = tilde alpha_{3 mod 3} = alpha_0 + alpha_2 + 2 alpha_3.
  RootDatum b3 = RootDatum::make(Family::B, 3);
  CHECK(act_on_root(b3, zeta_word(b3, 2), b3.simple(1)) == RootVec{1, 0, 1, 2});
}
