#include <fstream>
#include <iostream>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"

#include "iqg/iqg.hpp"
#include "iqg/qchar.hpp"
#include "iqg/suites.hpp"

using json = nlohmann::ordered_json;
using namespace iqg;
using suites::Check;
using suites::Status;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

weyl::Family family_of(const std::string& s) {
  try {
    return weyl::parse_family(s);
  } catch (const std::exception&) {
    throw UsageError("unknown type: " + s);
  }
}

void check_rank(weyl::Family f, int n) {
  int lo = f == weyl::Family::A ? 1 : (f == weyl::Family::D ? 4 : 2);
  if (n < lo || n > 12) throw UsageError("rank out of range for type " + std::string(1, weyl::family_char(f)));
}

json report_json(const std::vector<Check>& cs) {
  json checks = json::array(), timing = json::object();
  int pass = 0, fail = 0, skipped = 0;
  double total = 0;
  for (const auto& c : cs) {
    checks.push_back({{"id", c.id}, {"anchor", c.anchor}, {"status", suites::status_name(c.status)}, {"detail", c.detail}});
    timing[c.id] = c.seconds;
    total += c.seconds;
    (c.status == Status::Pass ? pass : c.status == Status::Fail ? fail : skipped)++;
  }
  timing["total"] = total;
  return {{"checks", checks}, {"summary", {{"pass", pass}, {"fail", fail}, {"skipped", skipped}}}, {"timing", timing}};
}

int exit_code(const std::vector<Check>& cs) {
  bool skipped = false;
  for (const auto& c : cs) {
    if (c.status == Status::Fail) return kExitFail;
    skipped |= c.status == Status::Skipped;
  }
  return skipped ? kExitUsage : 0;
}

void emit(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << j.dump(2) << "\n";
}

suites::Mode mode_of(const std::string& m) {
  if (m == "exact") return suites::Mode::Exact;
  if (m == "prob") return suites::Mode::Prob;
  throw UsageError("mode must be exact or prob");
}

// "A2", "D4", ...
std::pair<weyl::Family, int> datum_label(const std::string& s) {
  if (s.size() < 2) throw UsageError("bad datum label: " + s);
  weyl::Family f = family_of(s.substr(0, 1));
  int n = 0;
  try {
    n = std::stoi(s.substr(1));
  } catch (const std::exception&) {
    throw UsageError("bad datum label: " + s);
  }
  check_rank(f, n);
  return {f, n};
}

// Manifest entry -> request. Mirrors docs/manifest.schema.json.
suites::SuiteRequest request_from_json(const json& e) {
  static const std::set<std::string> keys = {"suite", "params", "mode", "seed", "points", "budget_seconds"};
  static const std::set<std::string> pkeys = {"grid", "i", "max_rank", "instances", "ranks", "corrupt"};
  if (!e.is_object()) throw UsageError("manifest entries must be objects");
  for (auto it = e.begin(); it != e.end(); ++it)
    if (!keys.count(it.key())) throw UsageError("unknown manifest key: " + it.key());
  if (!e.contains("suite") || !e["suite"].is_string()) throw UsageError("manifest entry needs a string 'suite'");
  suites::SuiteRequest r;
  r.suite = e["suite"];
  const auto& names = suites::suite_names();
  if (std::find(names.begin(), names.end(), r.suite) == names.end()) throw UsageError("unknown suite: " + r.suite);
  r.grid = suites::default_grid();
  auto get_int = [](const json& j, const char* k, auto lo) {
    if (!j[k].is_number_integer() || j[k].template get<decltype(lo)>() < lo)
      throw UsageError(std::string("'") + k + "' must be an integer >= " + std::to_string(lo));
    return j[k].template get<decltype(lo)>();
  };
  if (e.contains("mode")) {
    if (!e["mode"].is_string()) throw UsageError("'mode' must be a string");
    r.options.mode = mode_of(e["mode"]);
  }
  if (e.contains("seed")) r.options.seed = get_int(e, "seed", uint64_t{0});
  if (e.contains("points")) r.options.points = get_int(e, "points", 1);
  if (e.contains("budget_seconds")) {
    if (!e["budget_seconds"].is_number() || e["budget_seconds"].get<double>() < 0)
      throw UsageError("'budget_seconds' must be a nonnegative number");
    r.options.budget_seconds = e["budget_seconds"];
  }
  if (!e.contains("params")) return r;
  const json& p = e["params"];
  if (!p.is_object()) throw UsageError("'params' must be an object");
  for (auto it = p.begin(); it != p.end(); ++it)
    if (!pkeys.count(it.key())) throw UsageError("unknown params key: " + it.key());
  if (p.contains("grid")) {
    if (!p["grid"].is_array()) throw UsageError("'grid' must be an array of labels like \"D4\"");
    r.grid.data.clear();
    for (const auto& g : p["grid"]) {
      if (!g.is_string()) throw UsageError("'grid' must be an array of labels like \"D4\"");
      r.grid.data.push_back(datum_label(g));
    }
  }
  auto int_list = [](const json& j, const char* k) {
    if (!j[k].is_array()) throw UsageError(std::string("'") + k + "' must be an array of integers");
    std::vector<int> v;
    for (const auto& x : j[k]) {
      if (!x.is_number_integer()) throw UsageError(std::string("'") + k + "' must be an array of integers");
      v.push_back(x);
    }
    return v;
  };
  if (p.contains("i")) r.grid.nodes = int_list(p, "i");
  if (p.contains("ranks")) r.ranks = int_list(p, "ranks");
  if (p.contains("max_rank")) r.max_rank = get_int(p, "max_rank", 1);
  if (p.contains("instances")) r.instances = get_int(p, "instances", 1);
  if (p.contains("corrupt")) {
    if (!p["corrupt"].is_array()) throw UsageError("'corrupt' must be an array");
    for (const auto& c : p["corrupt"]) {
      if (!c.is_object() || !c.contains("datum") || !c.contains("i") || !c["datum"].is_string() ||
          !c["i"].is_number_integer())
        throw UsageError("'corrupt' entries look like {\"datum\": \"B3\", \"i\": 2}");
      auto [f, n] = datum_label(c["datum"]);
      r.weight_words.corrupt.emplace_back(f, n, c["i"].get<int>());
    }
  }
  return r;
}

std::vector<Check> run_manifest(const json& m) {
  if (!m.is_object() || !m.contains("checks") || !m["checks"].is_array())
    throw UsageError("manifest must be an object with a 'checks' array");
  for (auto it = m.begin(); it != m.end(); ++it)
    if (it.key() != "checks") throw UsageError("unknown manifest key: " + it.key());
  std::vector<suites::SuiteRequest> reqs;
  for (const auto& e : m["checks"]) reqs.push_back(request_from_json(e));  // validate everything first
  std::vector<Check> all;
  for (const auto& r : reqs) {
    auto cs = suites::run_suite(r);
    all.insert(all.end(), cs.begin(), cs.end());
  }
  std::stable_sort(all.begin(), all.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  return all;
}

json verdict_json(const iq::Verdict& v) { return {{"pass", v.pass}, {"detail", v.detail}}; }

template <class F>
json igood_json(const weyl::RootDatum* R, int i, bool cross) {
  auto p = iq::omega_prime_polynomial<F>(R, i);
  auto rep = iq::check_i_good(p, i, cross);
  json j = {{"type", std::string(1, weyl::family_char(R->family()))},
            {"n", R->rank()},
            {"i", i},
            {"polynomial", iq::omega_prime_expr(*R, i).to_string()},
            {"subterms", rep.subterms},
            {"mixed_vanish", verdict_json(rep.mixed_vanish)},
            {"degree_bound", verdict_json(rep.degree_bound)},
            {"p_plus", verdict_json(rep.p_plus)},
            {"p_minus_minus", verdict_json(rep.p_minus_minus)}};
  if (rep.braid_plus) {
    j["braid_plus"] = verdict_json(*rep.braid_plus);
    j["braid_minus"] = verdict_json(*rep.braid_minus);
  }
  j["pass"] = rep.pass();
  return j;
}

qchar::RootMultiset roots_from_json(const json& j) {
  qchar::RootMultiset r;
  if (!j.is_array()) throw UsageError("roots must be arrays of [e_a, e_q, e_C]");
  for (const auto& x : j) {
    if (!x.is_array() || x.size() != 3) throw UsageError("roots must be arrays of [e_a, e_q, e_C]");
    for (const auto& v : x)
      if (!v.is_number_integer()) throw UsageError("root exponents must be integers");
    r.push_back({x[0].get<int>(), x[1].get<int>(), x[2].get<int>()});
  }
  return r;
}

json roots_json(const qchar::RootMultiset& r) {
  json a = json::array();
  for (const auto& p : r) a.push_back(p.to_string());
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid group actions, good polynomials and boundary q-characters for affine iquantum groups"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string json_path;
  app.add_option("--json", json_path, "Write the JSON report to this file instead of stdout");

  // verify
  auto* verify = app.add_subcommand("verify", "Run one verification suite");
  std::string suite, type, mode = "prob";
  int n = 0, i = 0, max_rank = 0, instances = 100, points = 3;
  uint64_t seed = 1;
  double budget = 0;
  bool exact_flag = false;
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suites::suite_names()));
  verify->add_option("--type", type, "A, B, C or D");
  verify->add_option("--n", n, "Rank");
  verify->add_option("--i", i, "Node");
  verify->add_option("--max-rank", max_rank, "Largest rank to include");
  verify->add_option("--mode", mode, "exact or prob")->check(CLI::IsMember({"exact", "prob"}));
  verify->add_flag("--exact", exact_flag, "Same as --mode exact");
  verify->add_option("--seed", seed, "Seed for specialization points and random instances");
  verify->add_option("--points", points, "Specialization points in prob mode")->check(CLI::PositiveNumber);
  verify->add_option("--instances", instances, "Random instances per property")->check(CLI::PositiveNumber);
  verify->add_option("--budget", budget, "Wall-time budget per suite in seconds (0 = none)");

  // braid apply
  auto* braid = app.add_subcommand("braid", "Braid group actions");
  auto* apply = braid->add_subcommand("apply", "Apply T_w to an element given as an S-expression");
  std::string word, element;
  bool qsp = false;
  apply->add_option("--type", type)->required();
  apply->add_option("--n", n)->required();
  apply->add_option("--word", word, "Reduced word, e.g. \"pi1 s0 s2\"")->required();
  apply->add_option("--element", element, "S-expression, e.g. \"(E 1)\" or \"(B 2)\"")->required();
  apply->add_flag("--qsp", qsp, "Use the iquantum braid operators on B-polynomials");
  braid->require_subcommand(1);

  // igood check
  auto* igood = app.add_subcommand("igood", "Goodness of the nested bracket forms");
  auto* icheck = igood->add_subcommand("check", "Check i-goodness");
  bool cross = false;
  icheck->add_option("--type", type)->required();
  icheck->add_option("--n", n)->required();
  icheck->add_option("--i", i)->required();
  icheck->add_flag("--cross-check-braid", cross, "Compare P_+ and P_-- with the Lusztig braid images");
  icheck->add_flag("--exact", exact_flag, "Exact arithmetic instead of a random specialization");
  icheck->add_option("--seed", seed);
  igood->require_subcommand(1);

  // qchar
  auto* qc = app.add_subcommand("qchar", "q-characters of sl2 evaluation modules");
  auto* sl2 = qc->add_subcommand("sl2", "q-character and boundary q-character of W_n(a)");
  int qn = 0;
  sl2->add_option("--n", qn)->required()->check(CLI::NonNegativeNumber);
  auto* gamma = qc->add_subcommand("gamma", "Root data of the gamma series");
  std::string roots_file;
  gamma->add_option("--roots-file", roots_file)->required()->check(CLI::ExistingFile);
  qc->require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Run a manifest of suites");
  std::string manifest;
  run->add_option("manifest", manifest, "Manifest JSON file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      suites::SuiteRequest r;
      r.suite = suite;
      r.max_rank = max_rank;
      r.instances = instances;
      r.options = {exact_flag ? suites::Mode::Exact : mode_of(mode), seed, points, budget};
      r.grid = suites::default_grid();
      if (!type.empty()) {
        weyl::Family f = family_of(type);
        if (n) {
          check_rank(f, n);
          r.grid.data = {{f, n}};
        } else {
          std::erase_if(r.grid.data, [f](const auto& p) { return p.first != f; });
        }
      }
      if (i) r.grid.nodes = std::vector<int>{i};
      if (suite == "type-d" && n) r.ranks = {n};
      auto cs = suites::run_suite(r);
      emit(report_json(cs), json_path);
      return exit_code(cs);
    }
    if (apply->parsed()) {
      weyl::Family f = family_of(type);
      check_rank(f, n);
      const weyl::RootDatum* R = alg::datum(f, n);
      weyl::Word w = weyl::parse_word(word);
      alg::AlgElement x = alg::parse_sexpr(R, element);
      json j = {{"type", type}, {"n", n}, {"word", weyl::word_to_string(w)}, {"element", alg::to_sexpr(x)}};
      if (qsp) {
        auto r = iq::qsp_T_word_reduced(w, x);
        j["result"] = alg::to_sexpr(r.poly);
        j["embedded"] = alg::to_sexpr(r.image);
      } else {
        j["result"] = alg::to_sexpr(braid::lusztig_T_word(w, x));
      }
      emit(j, json_path);
      return 0;
    }
    if (icheck->parsed()) {
      weyl::Family f = family_of(type);
      check_rank(f, n);
      if (i < 1 || i > n) throw UsageError("node out of range");
      const weyl::RootDatum* R = alg::datum(f, n);
      json j;
      if (exact_flag) {
        j = igood_json<scalars::RationalFunc>(R, i, cross);
      } else {
        scalars::ScopedPoint sp(scalars::Fp::raw(suites::sample_points(seed, 1)[0]));
        j = igood_json<scalars::Fp>(R, i, cross);
      }
      j["mode"] = exact_flag ? "exact" : "prob";
      emit(j, json_path);
      return j["pass"].get<bool>() ? 0 : kExitFail;
    }
    if (sl2->parsed()) {
      auto a = qchar::SpectralParam::a();
      auto b = qchar::boundary_chi_eval_sl2(qn, a);
      bool sym = qchar::monomial_symmetry_check(qn, a) &&
                 b.value == qchar::boundary_chi_eval_sl2(qn, qchar::onsager_partner(a)).value;
      json j = {{"n", qn},
                {"chi_q", qchar::chi_q_eval_sl2(qn, a).to_string()},
                {"boundary_chi", b.value.to_string()},
                {"twist_agrees", b.agree()},
                {"partner_parameter", qchar::onsager_partner(a).to_string()},
                {"symmetric", sym}};
      emit(j, json_path);
      return b.agree() && sym ? 0 : kExitFail;
    }
    if (gamma->parsed()) {
      std::ifstream in(roots_file);
      json roots;
      try {
        roots = json::parse(in);
      } catch (const json::parse_error& e) {
        throw UsageError(std::string("roots file: ") + e.what());
      }
      if (!roots.is_object()) throw UsageError("roots file must be an object with 'Q' and 'R'");
      qchar::EigenData e;
      std::set<int> nodes;
      for (const char* key : {"Q", "R"}) {
        if (!roots.contains(key)) continue;
        if (!roots[key].is_object()) throw UsageError(std::string("'") + key + "' must map nodes to root lists");
        for (auto it = roots[key].begin(); it != roots[key].end(); ++it) {
          int node = std::stoi(it.key());
          nodes.insert(node);
          (key[0] == 'Q' ? e.Q : e.R)[node] = roots_from_json(it.value());
        }
      }
      json out = json::array();
      for (int node : nodes) {
        int d = roots.contains("d") && roots["d"].contains(std::to_string(node)) ? roots["d"][std::to_string(node)].get<int>() : 1;
        auto g = qchar::gamma_iota(e, node, d);
        out.push_back({{"node", node},
                       {"Qt", roots_json(g.Qt)},
                       {"Qt_dagger", roots_json(g.Qt_dagger)},
                       {"numerator", roots_json(g.numerator)},
                       {"denominator", roots_json(g.denominator)},
                       {"prefactor", g.prefactor}});
      }
      emit({{"gamma", out}}, json_path);
      return 0;
    }
    if (run->parsed()) {
      std::ifstream in(manifest);
      json m;
      try {
        m = json::parse(in);
      } catch (const json::parse_error& e) {
        throw UsageError(std::string("manifest: ") + e.what());
      }
      auto cs = run_manifest(m);
      emit(report_json(cs), json_path);
      return exit_code(cs);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const uq::DegreeCapExceeded& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
