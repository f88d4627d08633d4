#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iqg/weyl.hpp"

namespace iqg::suites {

enum class Status { Pass, Fail, Skipped };
std::string status_name(Status s);

struct Check {
  std::string id;
  std::string anchor;  // what is being verified, in words
  Status status = Status::Skipped;
  std::string detail;
  double seconds = 0;
};

enum class Mode { Exact, Prob };

struct Options {
  Mode mode = Mode::Prob;
  uint64_t seed = 1;
  int points = 3;              // specialization points in probabilistic mode
  double budget_seconds = 0;   // per suite; 0 = unlimited
};

// Specialization points of q derived from the seed.
std::vector<uint64_t> sample_points(uint64_t seed, int count);

// (family, rank) pairs; `nodes` restricts i when set.
struct Grid {
  std::vector<std::pair<weyl::Family, int>> data;
  std::optional<std::vector<int>> nodes;
};

// The standard grid: A2, A3, B2, B3, C2, C3, D4.
Grid default_grid();

struct WeightWordParams {
  int max_rank = 7;
  // Entries whose word gets its first s_1 doubled, as a negative control.
  std::vector<std::tuple<weyl::Family, int, int>> corrupt;
};

std::vector<Check> weight_words(const WeightWordParams& p);
std::vector<Check> orbit_lemmas(int max_rank);
std::vector<Check> bracket_identities(int max_rank, const Options& o);
std::vector<Check> two_step_images(const Options& o);
std::vector<Check> closed_forms(const Grid& g, const Options& o);
std::vector<Check> goodness(const Grid& g, const Options& o, int cross_check_max_rank = 3);
std::vector<Check> weak_compat(const Grid& g, const Options& o);
std::vector<Check> qi_membership(const Grid& g, const Options& o);
std::vector<Check> type_d_identities(const std::vector<int>& ranks, const Options& o);
std::vector<Check> qcharacters(int max_n);
std::vector<Check> properties(int instances, const Options& o);

// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

struct SuiteRequest {
  std::string suite;
  Grid grid;
  int max_rank = 0;  // 0 = suite default
  int instances = 100;
  std::vector<int> ranks;  // type_d
  WeightWordParams weight_words;
  Options options;
};
// Throws std::invalid_argument for an unknown suite.
std::vector<Check> run_suite(const SuiteRequest& r);

}  // namespace iqg::suites
