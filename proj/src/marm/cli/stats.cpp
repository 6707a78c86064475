#include "marm/cli/stats.hpp"

#include <cmath>

namespace marm {

namespace {
// Two-sided 97.5% quantiles of Student's t for df = 1..30; 1.96 beyond.
const double kT975[] = {
    12.706205, 4.302653, 3.182446, 2.776445, 2.570582, 2.446912, 2.364624,
    2.306004,  2.262157, 2.228139, 2.200985, 2.178813, 2.160369, 2.144787,
    2.131450,  2.119905, 2.109816, 2.100922, 2.093024, 2.085963, 2.079614,
    2.073873,  2.068658, 2.063899, 2.059539, 2.055529, 2.051831, 2.048407,
    2.045230,  2.042272};
}  // namespace

MeanCi mean_ci95(const std::vector<double>& xs) {
  MeanCi out;
  const size_t n = xs.size();
  if (n == 0) return out;
  double sum = 0.0;
  for (double x : xs) sum += x;
  out.mean = sum / n;
  if (n < 2) return out;
  double ss = 0.0;
  for (double x : xs) ss += (x - out.mean) * (x - out.mean);
  const double sd = std::sqrt(ss / (n - 1));
  const size_t df = n - 1;
  const double t = df <= 30 ? kT975[df - 1] : 1.959964;
  out.ci95_half = t * sd / std::sqrt(static_cast<double>(n));
  return out;
}

}  // namespace marm
