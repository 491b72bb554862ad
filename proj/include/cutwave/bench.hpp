#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cutwave/basis.hpp"
#include "cutwave/graph.hpp"

namespace cutwave {

struct BenchRecord {
  std::string method;
  double target = 0.0;         // requested size fraction
  double size_fraction = 0.0;  // achieved size fraction
  double l2_error = 0.0;       // ||W - W'||_2
  double seconds = 0.0;
  std::optional<std::string> failure;  // set when the method could not run at this point
};

struct BenchConfig {
  std::vector<std::string> methods{"fswt", "swt", "gwt", "gft"};
  std::vector<double> grid{0.02, 0.05, 0.1, 0.2};
  SwtParams swt;
  FswtParams fswt;
  bool parallel = true;
};

// For every method and grid point: the best reconstruction whose size fraction does not
// exceed the target. Wavelet methods with cuts search budgets q in {0, 1, 2, 4, ...} up to
// what the target affords; their size counts the stored edge bits. Baselines count
// coefficients only.
std::vector<BenchRecord> run_bench(const Graph& g, std::span<const double> w, const BenchConfig& cfg);

// Tab-separated: "method\tsize_fraction\tl2_error\tseconds". Failed points are written as
// '#' lines. With `timing` off the seconds column is 0, for reproducible files.
std::string format_bench(std::span<const BenchRecord> records, bool timing = true);

}  // namespace cutwave
