#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace gablab::selftest {

struct Options {
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

struct Outcome {
  int id = 0;
  std::string name;
  bool pass = false;
  /// Measured values, one line.
  std::string detail;
  /// Extra measurements that do not affect the verdict.
  std::vector<std::string> notes;
};

/// Runs the acceptance criteria in order. `on_outcome` sees each result as
/// soon as it is available.
std::vector<Outcome> run(const Options& opts,
                         const std::function<void(const Outcome&)>& on_outcome = {});

/// `PASS  3 bound_equality: ...` plus indented note lines.
void print(std::ostream& out, const Outcome& o);

}  // namespace gablab::selftest
