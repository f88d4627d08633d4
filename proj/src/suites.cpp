#include "iqg/suites.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <new>
#include <random>
#include <sstream>

#include "iqg/iqg.hpp"
#include "iqg/qchar.hpp"

namespace iqg::suites {

using alg::Element;
using scalars::Fp;
using scalars::RationalFunc;
using weyl::Family;
using weyl::RootDatum;

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

std::vector<uint64_t> sample_points(uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint64_t> d(2, (uint64_t{1} << 61) - 3);
  std::vector<uint64_t> out;
  for (int k = 0; k < count; ++k) out.push_back(d(rng));
  return out;
}

Grid default_grid() {
  return {{{Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::B, 3}, {Family::C, 2}, {Family::C, 3}, {Family::D, 4}},
          std::nullopt};
}

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Runs checks in order and stops running them once the suite's wall-time budget is spent.
class Runner {
 public:
  explicit Runner(double budget) : budget_(budget) {}

  void run(const std::string& id, const std::string& anchor, const std::function<Outcome()>& body) {
    Check c{id, anchor, Status::Skipped, "", 0};
    if (budget_ > 0 && used_ >= budget_) {
      c.detail = "skipped (budget): suite wall time exceeded";
      out_.push_back(c);
      return;
    }
    auto t0 = Clock::now();
    try {
      Outcome r = body();
      c.status = r.pass ? Status::Pass : Status::Fail;
      c.detail = r.detail;
    } catch (const uq::DegreeCapExceeded& e) {
      c.detail = std::string("skipped (budget): ") + e.what();
    } catch (const std::bad_alloc&) {
      c.detail = "skipped (budget): out of memory";
    }
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    used_ += c.seconds;
    out_.push_back(c);
  }

  std::vector<Check> take() { return std::move(out_); }

 private:
  double budget_;
  double used_ = 0;
  std::vector<Check> out_;
};

// Evaluates fn<F>() once in exact mode, or at every specialization point.
template <class Fn>
Outcome in_mode(const Options& o, Fn&& fn) {
  if (o.mode == Mode::Exact) return fn.template operator()<RationalFunc>();
  Outcome all{true, ""};
  for (uint64_t p : sample_points(o.seed, o.points)) {
    scalars::ScopedPoint sp(Fp::raw(p));
    Outcome r = fn.template operator()<Fp>();
    if (!r.pass) return {false, r.detail + " (q = " + std::to_string(p) + ")"};
    all.detail = r.detail;
  }
  return all;
}

std::string label(const RootDatum& R, int i) { return R.name() + "/i=" + std::to_string(i); }

std::vector<int> nodes_for(const Grid& g, int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (!g.nodes || std::find(g.nodes->begin(), g.nodes->end(), i) != g.nodes->end()) out.push_back(i);
  return out;
}

template <class F>
Element<F> gen(const RootDatum* R, char c) {
  return Element<F>::gen(R, c);
}

}  // namespace

std::vector<Check> weight_words(const WeightWordParams& p) {
  Runner run(0);
  const std::string anchor = "reduced expressions of fundamental weights: reducedness, closed-form length, translation";
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    int lo = f == Family::A ? 1 : (f == Family::D ? 4 : 2);
    int hi = std::min(p.max_rank, f == Family::D ? 7 : 6);
    for (int n = lo; n <= hi; ++n) {
      const RootDatum* R = alg::datum(f, n);
      for (int i = 1; i <= n; ++i) {
        bool corrupt = std::find(p.corrupt.begin(), p.corrupt.end(), std::tuple{f, n, i}) != p.corrupt.end();
        run.run("weight-words/" + label(*R, i) + (corrupt ? "/corrupted" : ""), anchor, [&]() -> Outcome {
          if (corrupt) {
            weyl::Word w = weyl::fundamental_weight_word(*R, i);
            auto it = std::find(w.begin(), w.end(), weyl::s(1));
            if (it != w.end()) w.insert(it, weyl::s(1));
            bool red = weyl::is_reduced(*R, w);
            return {red, weyl::word_to_string(w) + (red ? " is reduced" : " is not reduced")};
          }
          weyl::WeightWordCase c = weyl::verify_weight_word(*R, i);
          std::ostringstream s;
          s << c.word << ": " << (c.reduced ? "reduced" : "NOT reduced") << ", length " << c.length << " (stated "
            << c.stated << "), " << (c.translation ? "acts as t(omega_i)" : "NOT a translation by omega_i");
          return {c.pass(), s.str()};
        });
      }
    }
  }
  return run.take();
}

std::vector<Check> orbit_lemmas(int max_rank) {
  Runner run(0);
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = (f == Family::D ? 4 : 2); n <= max_rank; ++n) {
      const RootDatum* R = alg::datum(f, n);
      for (const auto& c : weyl::verify_orbit_lemmas(*R)) {
        std::string id = c.label;
        std::replace(id.begin(), id.end(), ' ', '/');
        run.run("orbit/" + id, "images of simple roots under the zeta and pi words", [&]() -> Outcome {
          return {c.pass, c.detail};
        });
      }
    }
  return run.take();
}

std::vector<Check> bracket_identities(int max_rank, const Options& o) {
  Runner run(o.budget_seconds);
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = (f == Family::D ? 4 : 2); n <= max_rank; ++n) {
      const RootDatum* R = alg::datum(f, n);
      for (int i = 0; i < R->nodes(); ++i)
        for (int j = 0; j < R->nodes(); ++j) {
          if (i == j || R->a(j, i) != -1) continue;
          std::string id = "brackets/" + R->name() + "/i=" + std::to_string(i) + ",j=" + std::to_string(j);
          run.run(id, "[F_j, tE_i]_{q_i} = 0, T_i(F_j) = [F_j, F_i]_{q_i}, T_i(tE_j) = [tE_j, tE_i]_{q_i}", [&] {
            return in_mode(o, [&]<class F>() -> Outcome {
              int d = R->d(i);
              auto Fi = gen<F>(R, alg::Fl(i)), Fj = gen<F>(R, alg::Fl(j));
              auto Ei = alg::tE<F>(R, i), Ej = alg::tE<F>(R, j);
              bool a = uq::is_zero(alg::qcomm(Fj, Ei, d));
              bool b = uq::equal_mod_relations(braid::lusztig_T(weyl::s(i), Fj), alg::qcomm(Fj, Fi, d));
              bool c = uq::equal_mod_relations(braid::lusztig_T(weyl::s(i), Ej), alg::qcomm(Ej, Ei, d));
              std::string det = std::string(a ? "" : "[F_j,tE_i] nonzero; ") + (b ? "" : "T_i(F_j) differs; ") +
                                (c ? "" : "T_i(tE_j) differs; ");
              return {a && b && c, det.empty() ? "all three hold" : det};
            });
          });
        }
    }
  return run.take();
}

std::vector<Check> two_step_images(const Options& o) {
  Runner run(o.budget_seconds);
  for (Family f : {Family::B, Family::C}) {
    const RootDatum* R = alg::datum(f, 2);
    for (int i = 0; i < R->nodes(); ++i)
      for (int j = 0; j < R->nodes(); ++j) {
        if (i == j || R->a(i, j) * R->a(j, i) != 2) continue;
        int a = R->a(j, i);
        std::string id = "two-step/" + R->name() + "/i=" + std::to_string(i) + ",j=" + std::to_string(j);
        run.run(id, "T_j T_i (B_j) and T_j T_i on tE_j, F_j for a doubly laced pair", [&] {
          return in_mode(o, [&]<class F>() -> Outcome {
            weyl::Word w = {weyl::s(j), weyl::s(i)};
            auto Bi = gen<F>(R, alg::B(i)), Bj = gen<F>(R, alg::B(j));
            auto Fi = gen<F>(R, alg::Fl(i)), Fj = gen<F>(R, alg::Fl(j));
            auto Ei = alg::tE<F>(R, i), Ej = alg::tE<F>(R, j);
            auto bi = iq::eta(Bi);
            auto lhs = iq::eta(braid::qsp_T_word_naive(w, Bj));
            auto ET = braid::lusztig_T(weyl::s(j), braid::lusztig_T(weyl::s(i), Ej));
            auto FT = braid::lusztig_T(weyl::s(j), braid::lusztig_T(weyl::s(i), Fj));
            std::vector<std::pair<std::string, bool>> r;
            if (a == -2) {
              r.push_back({"B", uq::equal_mod_relations(lhs, iq::eta(iq::boldP(R, i, Bj, Bi)))});
              r.push_back({"tE", uq::equal_mod_relations(ET, iq::hatP(R, i, Ej, Ei))});
              r.push_back({"tE via B", uq::equal_mod_relations(ET, iq::boldP(R, i, Ej, bi))});
              r.push_back({"F", uq::equal_mod_relations(FT, iq::hatP(R, i, Fj, Fi))});
            } else {
              r.push_back({"B", uq::equal_mod_relations(lhs, iq::eta(alg::qcomm(Bi, Bj, 2)))});
              r.push_back({"tE", uq::equal_mod_relations(ET, alg::qcomm(Ei, Ej, 2))});
              r.push_back({"tE via B", uq::equal_mod_relations(ET, alg::qcomm(bi, Ej, 2))});
              r.push_back({"F", uq::equal_mod_relations(FT, alg::qcomm(Fi, Fj, 2))});
            }
            std::string bad;
            for (auto& [name, b] : r)
              if (!b) bad += name + " differs; ";
            return {bad.empty(), (a == -2 ? "a_ji = -2: " : "a_ji = -1: ") + (bad.empty() ? std::string("all hold") : bad)};
          });
        });
      }
  }
  return run.take();
}

std::vector<Check> closed_forms(const Grid& g, const Options& o) {
  Runner run(o.budget_seconds);
  for (auto [f, n] : g.data) {
    const RootDatum* R = alg::datum(f, n);
    for (int i : nodes_for(g, n)) {
      std::string ex = iq::omega_prime_expr(*R, i).to_string();
      run.run("closed-forms/" + label(*R, i), "nested bracket form of T_{omega'_i}(B_i)", [&] {
        return in_mode(o, [&]<class F>() -> Outcome {
          auto lhs = iq::eta_of_qsp_image<F>(R, i);
          auto rhs = iq::eta(iq::omega_prime_polynomial<F>(R, i));
          bool eq = uq::equal_mod_relations(lhs, rhs);
          return {eq, ex + (eq ? " matches" : " differs from") + " the braid image"};
        });
      });
    }
  }
  return run.take();
}

std::vector<Check> goodness(const Grid& g, const Options& o, int cross_check_max_rank) {
  Runner run(o.budget_seconds);
  for (auto [f, n] : g.data) {
    const RootDatum* R = alg::datum(f, n);
    for (int i : nodes_for(g, n)) {
      run.run("goodness/" + label(*R, i), "i-goodness of the nested bracket form", [&] {
        return in_mode(o, [&]<class F>() -> Outcome {
          auto rep = iq::check_i_good(iq::omega_prime_polynomial<F>(R, i), i, n <= cross_check_max_rank);
          std::string d = std::to_string(rep.subterms) + " subterms; " + rep.mixed_vanish.detail + "; " +
                          rep.degree_bound.detail + "; " + rep.p_plus.detail + "; " + rep.p_minus_minus.detail;
          if (rep.braid_plus) d += "; " + rep.braid_plus->detail + "; " + rep.braid_minus->detail;
          return {rep.pass(), d};
        });
      });
    }
  }
  return run.take();
}

std::vector<Check> weak_compat(const Grid& g, const Options& o) {
  Runner run(o.budget_seconds);
  for (auto [f, n] : g.data) {
    const RootDatum* R = alg::datum(f, n);
    for (int i : nodes_for(g, n)) {
      run.run("compat/" + label(*R, i), "eta(T_w(B_i)) = T_w(F_i) + T_w(tE_i) modulo the d_i >= 1 positive part", [&] {
        return in_mode(o, [&]<class F>() -> Outcome {
          auto rep = iq::weak_compat_check<F>(R, i);
          return {rep.pass, rep.detail + " (" + std::to_string(rep.difference_terms) + " terms)"};
        });
      });
    }
  }
  return run.take();
}

std::vector<Check> qi_membership(const Grid& g, const Options& o) {
  Runner run(o.budget_seconds);
  for (auto [f, n] : g.data) {
    const RootDatum* R = alg::datum(f, n);
    for (int i : nodes_for(g, n)) {
      run.run("qi/" + label(*R, i), "Q_i = C_i (P_- - P_--) lies in the d_i >= 1 positive part", [&] {
        return in_mode(o, [&]<class F>() -> Outcome {
          auto q = iq::extract_Qi(iq::omega_prime_polynomial<F>(R, i), i);
          bool in = uq::in_positive_subalgebra(q, uq::Positivity::d_at_least(i, 1));
          return {in, std::to_string(q.size()) + " terms, " + (in ? "inside" : "outside")};
        });
      });
    }
  }
  return run.take();
}

std::vector<Check> type_d_identities(const std::vector<int>& ranks, const Options& o) {
  Runner run(o.budget_seconds);
  for (int n : ranks) {
    const RootDatum* R = alg::datum(Family::D, n);
    std::map<std::string, Outcome> merged;
    std::vector<std::string> order;
    // One evaluation per mode; split into one check per identity afterwards.
    bool skipped = false;
    std::string why;
    auto eval = [&]<class F>() -> Outcome {
      for (const auto& r : iq::verify_type_d_identities<F>(R)) {
        if (!merged.count(r.name)) order.push_back(r.name), merged[r.name] = {true, r.detail};
        if (!r.pass) merged[r.name] = {false, r.detail};
      }
      return {true, ""};
    };
    try {
      in_mode(o, eval);
    } catch (const uq::DegreeCapExceeded& e) {
      skipped = true, why = e.what();
    }
    for (const auto& name : order) {
      const Outcome& r = merged[name];
      run.run("type-d/" + R->name() + "/" + name, "type D vanishing identities and the commutator with F_i",
              [&]() -> Outcome { return r; });
    }
    if (skipped) run.run("type-d/" + R->name(), "type D vanishing identities", [&]() -> Outcome {
      throw uq::DegreeCapExceeded(why);
    });
  }
  return run.take();
}

std::vector<Check> qcharacters(int max_n) {
  using namespace qchar;
  Runner run(0);
  const SpectralParam a = SpectralParam::a();
  for (int n = 0; n <= max_n; ++n) {
    std::string tag = "/n=" + std::to_string(n);
    run.run("qchar/twist" + tag, "boundary q-character: twist of the q-character equals the direct sum", [&]() -> Outcome {
      auto b = boundary_chi_eval_sl2(n, a);
      return {b.agree(), std::to_string(b.value.terms.size()) + " monomials"};
    });
    run.run("qchar/onsager" + tag, "boundary q-character is unchanged under a -> q^{-2} C^{-1} a^{-1}", [&]() -> Outcome {
      bool eq = boundary_chi_eval_sl2(n, a).value == boundary_chi_eval_sl2(n, onsager_partner(a)).value;
      return {eq, eq ? "equal" : "different"};
    });
    run.run("qchar/monomials" + tag, "M_i(a) = M_{n-i}(q^{-2} C^{-1} a^{-1})", [&]() -> Outcome {
      bool eq = monomial_symmetry_check(n, a);
      return {eq, eq ? "all monomials match" : "mismatch"};
    });
  }
  run.run("qchar/twist-multiplicative", "the twist is a ring homomorphism", []() -> Outcome {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> e(-3, 3), node(1, 3);
    auto rnd = [&] {
      YMonomial m;
      for (int k = 0; k < 4; ++k) m = m * YMonomial::Y(node(rng), {e(rng), e(rng), e(rng)}, e(rng));
      return m;
    };
    for (int t = 0; t < 200; ++t) {
      YMonomial x = rnd(), y = rnd();
      if (y_twist(x * y) != y_twist(x) * y_twist(y)) return {false, "fails on " + x.to_string() + ", " + y.to_string()};
    }
    return {true, "200 random pairs"};
  });
  run.run("qchar/gamma-exchange", "gamma data: dagger of Qt(Q, R) equals Qt(R, Q)", []() -> Outcome {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> e(-3, 3), len(0, 3);
    for (int t = 0; t < 100; ++t) {
      EigenData x, y;
      for (int k = len(rng); k > 0; --k) x.Q[1].push_back({e(rng), e(rng), e(rng)});
      for (int k = len(rng); k > 0; --k) x.R[1].push_back({e(rng), e(rng), e(rng)});
      y.Q = x.R, y.R = x.Q;
      auto gx = gamma_iota(x, 1), gy = gamma_iota(y, 1);
      if (dagger(gx.Qt) != gy.Qt || gx.Qt_dagger != gy.Qt) return {false, "mismatch"};
    }
    return {true, "100 random root data"};
  });
  return run.take();
}

namespace {

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

template <class F>
Element<F> random_letter(const RootDatum* R, int j, std::mt19937_64& rng) {
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: return gen<F>(R, alg::Fl(j));
    case 1: return alg::tE<F>(R, j);
    default: return iq::eta(gen<F>(R, alg::B(j)));
  }
}

template <class F>
Element<F> random_uq_monomial(const RootDatum* R, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> node(0, R->nodes() - 1), kind(0, 3), len(1, 3), ex(-2, 2);
  Element<F> x(R, alg::qpow<F>(ex(rng)));
  for (int l = len(rng); l > 0; --l) {
    int j = node(rng);
    switch (kind(rng)) {
      case 0: x = x * gen<F>(R, alg::E(j)); break;
      case 1: x = x * gen<F>(R, alg::Fl(j)); break;
      case 2: x = x * alg::K<F>(R, j, 1); break;
      default: x = x * alg::K<F>(R, j, -1); break;
    }
  }
  return x;
}

template <class F>
Element<F> compose_lusztig(const weyl::Word& w, const Element<F>& x) {
  Element<F> y = x;
  for (auto it = w.rbegin(); it != w.rend(); ++it) y = uq::normal_form(braid::lusztig_T(*it, y));
  return y;
}

}  // namespace

std::vector<Check> properties(int instances, const Options& o) {
  Runner run(o.budget_seconds);
  std::string count = std::to_string(instances) + " instances";
  run.run("properties/chains", "P_k = P'_k on almost commuting tuples", [&] {
    return in_mode(o, [&]<class F>() -> Outcome {
      std::mt19937_64 rng(o.seed ^ 0x11);
      const RootDatum* Rs[] = {alg::datum(Family::A, 3), alg::datum(Family::D, 4), alg::datum(Family::A, 4)};
      for (int t = 0; t < instances; ++t) {
        const RootDatum* R = Rs[t % 3];
        std::vector<Element<F>> y;
        for (int j : random_chain(R, rng, 2 + t % 3)) y.push_back(random_letter<F>(R, j, rng));
        auto c = alg::qpow<F>(std::uniform_int_distribution<int>(-2, 2)(rng));
        if (!uq::equal_mod_relations(iq::P(y, c), iq::Pprime(y, c))) return {false, "instance " + std::to_string(t)};
      }
      return {true, count};
    });
  });
  run.run("properties/exchange", "P_k is unchanged by swapping commuting neighbours", [&] {
    return in_mode(o, [&]<class F>() -> Outcome {
      std::mt19937_64 rng(o.seed ^ 0x22);
      const RootDatum* R = alg::datum(Family::D, 4);
      for (int t = 0; t < instances; ++t) {
        std::vector<int> leaves = {1, 3, 4};
        std::shuffle(leaves.begin(), leaves.end(), rng);
        std::vector<Element<F>> y = {random_letter<F>(R, leaves[0], rng), random_letter<F>(R, leaves[1], rng),
                                     random_letter<F>(R, 2, rng)};
        if (t % 2) y.push_back(random_letter<F>(R, 0, rng));
        std::vector<Element<F>> z = y;
        std::swap(z[0], z[1]);
        auto c = alg::qpow<F>(1);
        if (!uq::equal_mod_relations(iq::P(y, c), iq::P(z, c))) return {false, "instance " + std::to_string(t)};
      }
      return {true, count};
    });
  });
  run.run("properties/braid-relations", "braid relations of the Lusztig operators on generators", [&] {
    return in_mode(o, [&]<class F>() -> Outcome {
      std::mt19937_64 rng(o.seed ^ 0x33);
      struct Rel {
        const RootDatum* R;
        int i, j, m;
      };
      std::vector<Rel> rels;
      for (auto [f, n] : {std::pair{Family::A, 2}, std::pair{Family::A, 3}, std::pair{Family::B, 2}, std::pair{Family::C, 2}}) {
        const RootDatum* R = alg::datum(f, n);
        for (int i = 0; i < R->nodes(); ++i)
          for (int j = i + 1; j < R->nodes(); ++j) {
            int p = R->a(i, j) * R->a(j, i);
            rels.push_back({R, i, j, p == 0 ? 2 : p == 1 ? 3 : 4});
          }
      }
      for (int t = 0; t < instances; ++t) {
        Rel r = rels[std::uniform_int_distribution<std::size_t>(0, rels.size() - 1)(rng)];
        weyl::Word a, b;
        for (int k = 0; k < r.m; ++k) {
          a.push_back(weyl::s(k % 2 ? r.j : r.i));
          b.push_back(weyl::s(k % 2 ? r.i : r.j));
        }
        int node = std::uniform_int_distribution<int>(0, r.R->nodes() - 1)(rng);
        bool e = std::uniform_int_distribution<int>(0, 1)(rng);
        auto x = gen<F>(r.R, e ? alg::E(node) : alg::Fl(node));
        if (!uq::equal_mod_relations(compose_lusztig(a, x), compose_lusztig(b, x)))
          return {false, r.R->name() + " s" + std::to_string(r.i) + " s" + std::to_string(r.j)};
      }
      return {true, count};
    });
  });
  run.run("properties/normal-form-confluence", "normal forms do not depend on the order of reduction", [&] {
    return in_mode(o, [&]<class F>() -> Outcome {
      std::mt19937_64 rng(o.seed ^ 0x44);
      const RootDatum* Rs[] = {alg::datum(Family::A, 2), alg::datum(Family::B, 2), alg::datum(Family::C, 2)};
      for (int t = 0; t < instances; ++t) {
        const RootDatum* R = Rs[t % 3];
        auto x = random_uq_monomial<F>(R, rng), y = random_uq_monomial<F>(R, rng), z = random_uq_monomial<F>(R, rng);
        auto left = uq::normal_form(uq::normal_form(x * y) * z);
        auto right = uq::normal_form(x * uq::normal_form(y * z));
        auto whole = uq::normal_form(x * y * z);
        if (!(left == right && right == whole && uq::normal_form(whole) == whole))
          return {false, "instance " + std::to_string(t)};
      }
      return {true, count};
    });
  });
  run.run("properties/subterm-sum", "subterms of eta(p) add up to eta(p)", [&] {
    return in_mode(o, [&]<class F>() -> Outcome {
      std::mt19937_64 rng(o.seed ^ 0x55);
      const RootDatum* Rs[] = {alg::datum(Family::A, 2), alg::datum(Family::B, 2), alg::datum(Family::C, 2)};
      for (int t = 0; t < instances; ++t) {
        const RootDatum* R = Rs[t % 3];
        std::uniform_int_distribution<int> node(0, R->rank()), len(1, 3), coef(-3, 3);
        Element<F> p(R);
        for (int k = 0; k < 2; ++k) {
          std::string w;
          for (int l = len(rng); l > 0; --l) w += alg::B(node(rng));
          p += Element<F>::monomial(R, alg::Monomial{w, {}}, scalars::CentralSum<F>(coef(rng)) * alg::qpow<F>(coef(rng)));
        }
        Element<F> sum(R);
        for (const auto& [ty, x] : iq::subterm_decompose(p)) sum += x;
        if (!uq::equal_mod_relations(sum, iq::eta(p))) return {false, "instance " + std::to_string(t)};
      }
      return {true, count};
    });
  });
  return run.take();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"weight-words",  "orbit", "brackets", "two-step", "closed-forms", "goodness",
                                                 "compat",  "qi",    "type-d",   "qchar",    "properties"};
  return names;
}

std::vector<Check> run_suite(const SuiteRequest& r) {
  const Options& o = r.options;
  const std::string& s = r.suite;
  std::vector<Check> out;
  if (s == "weight-words") {
    WeightWordParams p = r.weight_words;
    if (r.max_rank) p.max_rank = r.max_rank;
    out = weight_words(p);
  } else if (s == "orbit") {
    out = orbit_lemmas(r.max_rank ? r.max_rank : 7);
  } else if (s == "brackets") {
    out = bracket_identities(r.max_rank ? r.max_rank : 4, o);
  } else if (s == "two-step") {
    out = two_step_images(o);
  } else if (s == "closed-forms") {
    out = closed_forms(r.grid, o);
  } else if (s == "goodness") {
    out = goodness(r.grid, o);
  } else if (s == "compat") {
    out = weak_compat(r.grid, o);
  } else if (s == "qi") {
    out = qi_membership(r.grid, o);
  } else if (s == "type-d") {
    out = type_d_identities(r.ranks.empty() ? std::vector<int>{4, 5} : r.ranks, o);
  } else if (s == "qchar") {
    out = qcharacters(r.max_rank ? r.max_rank : 12);
  } else if (s == "properties") {
    out = properties(r.instances, o);
  } else {
    throw std::invalid_argument("unknown suite: " + s);
  }
  std::stable_sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  return out;
}

}  // namespace iqg::suites
