#pragma once
// Result records shared by the verification checks and the CLI.

#include <string>
#include <vector>

namespace bergman {

struct CheckMetric {
  std::string name;
  double computed = 0.0;
  double expected = 0.0;   // target value or bound, depending on the metric
  double tolerance = 0.0;
  bool pass = false;
};

struct CheckReport {
  std::string name;
  // The identity or inequality the check exercises, stated as a formula.
  std::string anchor;
  std::vector<CheckMetric> metrics;
  bool pass = false;
  // Informational reports are printed but never gate an aggregate verdict.
  bool informational = false;
  // Wall-clock time. Kept in memory and on the console only; serialized
  // outputs omit it so identical inputs produce identical files.
  double runtime_seconds = 0.0;
};

}  // namespace bergman
