#pragma once

#include <cstdint>
#include <nlohmann/json_fwd.hpp>
#include <string>
#include <utility>
#include <vector>

namespace qgr::verify {

struct Options {
  std::vector<std::pair<int, int>> grid; // empty: use the suite default
  std::uint64_t seed = 314159;
  int samples = 100;
  int degree_offset = 2; // D = n + offset for graded computations
};

enum class Status { Pass, Fail, Note };

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<std::pair<int, int>> grid;
  std::uint64_t seed = 0;
  long long millis = 0;
  std::vector<Check> checks;

  bool ok() const;        // no Fail entries
  int count(Status s) const;
  void add(Status s, std::string name, std::string detail = {});
  std::string to_text() const;
  nlohmann::json to_json() const;
};

/// Suites: bijections, edges, bruhat, paving, pluecker, presentations,
/// gkm, ribbon, polytopes, all.
std::vector<std::string> suite_names();
bool is_suite(const std::string& name);
Report run_suite(const std::string& name, const Options& opt);

/// (r,n) in {(1,3),(1,5),(2,4),(2,5),(2,6),(3,5),(3,6)}.
const std::vector<std::pair<int, int>>& default_grid();

} // namespace qgr::verify
