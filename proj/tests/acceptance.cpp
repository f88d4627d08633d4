// One line per acceptance criterion. Exits nonzero if a criterion fails for a reason
// other than the two known conflicts described in the README.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "iqg/freealg.hpp"
#include "iqg/suites.hpp"

using namespace iqg;
using namespace iqg::suites;
using weyl::Family;

namespace {

struct Tally {
  int pass = 0, fail = 0, skipped = 0;
  std::vector<const Check*> failed;
};

Tally tally(const std::vector<Check>& cs) {
  Tally t;
  for (const auto& c : cs) {
    if (c.status == Status::Pass) ++t.pass;
    else if (c.status == Status::Fail) ++t.fail, t.failed.push_back(&c);
    else ++t.skipped;
  }
  return t;
}

std::vector<Check> concat(std::vector<Check> a, const std::vector<Check>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Grid grid_of(std::initializer_list<std::pair<Family, int>> d) { return {d, std::nullopt}; }

int unexpected = 0;

void report(int k, bool pass, const std::string& summary, double secs, bool known = false) {
  std::printf("criterion %2d: %s  %s  [%.1f s]\n", k, pass ? "PASS" : "FAIL", summary.c_str(), secs);
  std::fflush(stdout);
  if (!pass && !known) ++unexpected;
}

template <class Fn>
double timed(Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string counts(const Tally& t) {
  std::ostringstream s;
  s << t.pass << " pass, " << t.fail << " fail";
  if (t.skipped) s << ", " << t.skipped << " skipped";
  return s.str();
}

std::string first_failure(const Tally& t) {
  return t.failed.empty() ? "" : "; first failure " + t.failed[0]->id + ": " + t.failed[0]->detail;
}

}  // namespace

int main() {
  Options exact{Mode::Exact, 1, 1, 0};
  Options prob{Mode::Prob, 20240601, 3, 0};
  Grid low = grid_of({{Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::B, 3}, {Family::C, 2}, {Family::C, 3}});
  Grid full = default_grid();
  Grid d4 = grid_of({{Family::D, 4}});

  // 1. Reduced expressions of fundamental weights.
  {
    int total = 0, c_mismatch = 0, other = 0;
    double secs = timed([&] {
      for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
        int lo = f == Family::A ? 1 : (f == Family::D ? 4 : 2), hi = f == Family::D ? 7 : 6;
        for (int n = lo; n <= hi; ++n) {
          const weyl::RootDatum* R = alg::datum(f, n);
          for (int i = 1; i <= n; ++i) {
            ++total;
            auto c = weyl::verify_weight_word(*R, i);
            if (c.pass()) continue;
            bool explained = f == Family::C && i < n && c.reduced && c.translation &&
                             c.length == i * (2 * n - i + 1) && c.length == weyl::coefficient_sum(*R, i);
            (explained ? c_mismatch : other)++;
          }
        }
      }
    });
    std::ostringstream s;
    s << total << " words: all reduced translations except " << other << "; " << c_mismatch
      << " type C entries with i < n have length i(2n-i+1) instead of the closed form i(n+1)";
    report(1, c_mismatch + other == 0, s.str(), secs, other == 0);
  }

  // 2. Orbit lemmas.
  {
    std::vector<Check> cs;
    int swapped = 0, other = 0;
    double secs = timed([&] {
      for (Family f : {Family::A, Family::B, Family::C, Family::D})
        for (int n = (f == Family::D ? 4 : 2); n <= 7; ++n) {
          const weyl::RootDatum* R = alg::datum(f, n);
          for (const auto& c : weyl::verify_orbit_lemmas(*R)) {
            if (c.pass) continue;
            weyl::RootVec w = c.expected;
            if (f == Family::D) std::swap(w[n - 1], w[n]);
            (f == Family::D && w == c.got ? swapped : other)++;
          }
        }
      cs = orbit_lemmas(7);
    });
    Tally t = tally(cs);
    std::ostringstream s;
    s << t.pass + t.fail << " root images: " << t.pass << " match; " << swapped
      << " type D images match only after exchanging alpha_{n-1} and alpha_n; " << other << " other mismatches";
    report(2, t.fail == 0, s.str(), secs, other == 0);
  }

  // 3. q-bracket identities for a_ji = -1, ranks <= 4, exact.
  {
    std::vector<Check> cs;
    double secs = timed([&] { cs = bracket_identities(4, exact); });
    Tally t = tally(cs);
    report(3, t.fail == 0 && t.skipped == 0, "adjacent pairs, exact: " + counts(t) + first_failure(t), secs);
  }

  // 4. Two-step images in B2 and C2, exact.
  {
    std::vector<Check> cs;
    double secs = timed([&] { cs = two_step_images(exact); });
    Tally t = tally(cs);
    report(4, t.fail == 0 && t.skipped == 0 && t.pass > 0, "doubly laced pairs, exact: " + counts(t) + first_failure(t), secs);
  }

  // 5. Closed forms against the braid images.
  {
    std::vector<Check> ce, cp;
    double secs = timed([&] {
      ce = closed_forms(low, exact);
      cp = closed_forms(full, prob);
    });
    Tally te = tally(ce), tp = tally(cp);
    report(5, te.fail + tp.fail + te.skipped + tp.skipped == 0,
           "exact (rank <= 3): " + counts(te) + "; probabilistic (with D4): " + counts(tp) + first_failure(te) +
               first_failure(tp),
           secs);
  }

  // 6, 7. Goodness (with the braid cross-check up to rank 3) and weak compatibility.
  {
    std::vector<Check> ge, gp;
    double secs = timed([&] {
      ge = goodness(low, exact, 3);
      gp = goodness(d4, prob, 3);
    });
    Tally t = tally(concat(ge, gp));
    report(6, t.fail + t.skipped == 0, "exact up to rank 3, probabilistic D4: " + counts(t) + first_failure(t), secs);
  }
  {
    std::vector<Check> ce, cp, cross;
    double secs = timed([&] {
      ce = weak_compat(low, exact);
      cp = weak_compat(d4, prob);
      cross = goodness(low, prob, 3);
    });
    Tally t = tally(concat(ce, cp)), tc = tally(cross);
    report(7, t.fail + t.skipped + tc.fail + tc.skipped == 0,
           "congruence " + counts(t) + "; direct Lusztig cross-check up to rank 3: " + counts(tc) + first_failure(t) +
               first_failure(tc),
           secs);
  }

  // 8. Q_i membership and the type D identities.
  {
    std::vector<Check> qe, qp, td;
    double secs = timed([&] {
      qe = qi_membership(low, exact);
      qp = qi_membership(d4, prob);
      td = type_d_identities({4, 5}, prob);
    });
    Tally tq = tally(concat(qe, qp)), tt = tally(td);
    report(8, tq.fail + tq.skipped + tt.fail + tt.skipped == 0 && tt.pass > 0,
           "Q_i membership " + counts(tq) + "; D4/D5 identities " + counts(tt) + first_failure(tq) + first_failure(tt),
           secs);
  }

  // 9. Boundary q-characters.
  {
    std::vector<Check> cs;
    double secs = timed([&] { cs = qcharacters(12); });
    Tally t = tally(cs);
    report(9, t.fail == 0, "n <= 12: " + counts(t) + first_failure(t), secs);
  }

  // 10. Randomized property suites.
  {
    std::vector<Check> cs;
    double secs = timed([&] { cs = properties(100, prob); });
    Tally t = tally(cs);
    std::string names;
    for (const auto& c : cs) names += (names.empty() ? "" : ", ") + c.id.substr(c.id.find('/') + 1);
    report(10, t.fail + t.skipped == 0, names + " (100 instances each): " + counts(t) + first_failure(t), secs);
  }

  std::printf("unexpected failures: %d\n", unexpected);
  return unexpected == 0 ? 0 : 1;
}
