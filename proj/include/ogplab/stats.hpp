#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ogplab {

struct MeanStderr {
  double mean = 0.0;
  double stderr_ = 0.0;  // sample std / sqrt(count)
  std::int64_t count = 0;
};

MeanStderr mean_stderr(const std::vector<double>& values);

// Unweighted least squares y = intercept + slope * x. Standard errors of the
// coefficients are propagated from per-point sigmas when given, otherwise
// from the residual variance.
struct LineFit {
  double intercept = 0.0;
  double slope = 0.0;
  double intercept_stderr = 0.0;
  double slope_stderr = 0.0;
  std::vector<double> residuals;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y,
                 const std::vector<double>& y_sigma = {});

// Fixed-width histogram over [0,1].
struct Histogram {
  std::vector<double> edges;          // bins+1 ascending, edges.front()=0, back()=1
  std::vector<std::uint64_t> counts;  // per bin
  std::uint64_t total = 0;

  explicit Histogram(int bins = 40);
  void add(double value);  // value must be in [0,1]
  int bin_of(double value) const;

  // Widest run of empty bins strictly inside the support hull, at least
  // min_width_bins wide. Returns the (lo, hi) bin-edge values.
  std::optional<std::pair<double, double>> widest_interior_gap(
      int min_width_bins = 2) const;
};

}  // namespace ogplab
