#pragma once

#include <vector>

namespace marm {

struct MeanCi {
  double mean = 0.0;
  double ci95_half = 0.0;  // half-width of the two-sided 95% t-interval
};

// Student-t based confidence interval over a small sample (one value per
// seed). Degenerate samples (n < 2) report a zero-width interval.
MeanCi mean_ci95(const std::vector<double>& xs);

}  // namespace marm
