#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wpstab::verify {

struct CheckLine {
  std::string text;
  bool pass = false;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<CheckLine> lines;
};

struct Options {
  std::string data_dir = "data";
  std::uint64_t seed = 20260809;
};

// Numbered verification criteria; ids 1..10.
CriterionResult run_criterion(int id, const Options& opt);

// Named suites: lemmas, wpb, bergman, quintic, gamma, all.
std::vector<int> criteria_for_suite(const std::string& suite);
std::vector<CriterionResult> run_suite(const std::string& suite, const Options& opt);

std::string format_result(const CriterionResult& r, bool verbose);

}  // namespace wpstab::verify
