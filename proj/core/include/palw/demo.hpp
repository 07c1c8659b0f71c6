#pragma once

#include <string>
#include <vector>

#include "palw/json_io.hpp"

namespace palw {

/// The lamplighter example with f supported in [-7, 7] and shift 7.
struct WorkedExample {
  std::vector<std::int64_t> xs;
  std::vector<std::int64_t> f, g, h;
  std::string w_g, w_h;
  std::vector<std::string> factors;
  bool w_g_evaluates = false;       // w_g -> (g, 0)
  bool w_h_evaluates = false;       // w_h -> (h, 1)
  bool product_evaluates = false;   // w_g w_h t^6 -> (f, 7)
  Json width3;                      // certificate for ({0:1, 1:2}, 3)

  bool all_checks_pass() const;
};

WorkedExample run_worked_example(std::int64_t scan_radius = 25);

/// Table, words, evaluation checks and the width-3 summary as text.
std::string format_worked_example(const WorkedExample& ex);

}  // namespace palw
