#pragma once

#include <cmath>
#include <string>
#include <unordered_set>
#include <vector>

#include "mcissa/types.hpp"

namespace mcissa {

/// A panel of M time series observed at T common time points.
///
/// `values` is series-by-time (row i holds series i). `means` is filled by
/// demean() so components can later be reported at the data's level.
template <typename Scalar = double>
struct TimeSeriesPanel {
  Matrix<Scalar> values;                  // M x T
  std::vector<std::string> series_names;  // size M
  std::vector<std::string> time_labels;   // empty, or size T
  Vector<Scalar> means;                   // size M once demeaned, else empty

  Index series_count() const { return values.rows(); }
  Index sample_count() const { return values.cols(); }
  bool has_means() const { return means.size() == values.rows() && values.rows() > 0; }
};

template <typename Scalar>
void validate_panel(const TimeSeriesPanel<Scalar>& panel) {
  const Index m = panel.series_count();
  const Index t = panel.sample_count();
  if (m < 1) throw ValidationError("panel must contain at least one series");
  if (t < 4) throw ValidationError("panel must contain at least 4 time points, got " +
                                   std::to_string(t));
  if (static_cast<Index>(panel.series_names.size()) != m)
    throw ValidationError("panel has " + std::to_string(m) + " series but " +
                          std::to_string(panel.series_names.size()) + " names");
  if (!panel.time_labels.empty() && static_cast<Index>(panel.time_labels.size()) != t)
    throw ValidationError("time label count does not match sample count");
  std::unordered_set<std::string> seen;
  for (const auto& name : panel.series_names) {
    if (!seen.insert(name).second)
      throw ValidationError("duplicate series name \"" + name + "\"");
  }
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < t; ++j)
      if (!std::isfinite(static_cast<double>(panel.values(i, j))))
        throw ValidationError("non-finite value in series \"" + panel.series_names[i] +
                              "\" at time index " + std::to_string(j));
}

/// Subtracts each series' sample mean. The subtracted means accumulate into
/// `means`, so applying demean twice leaves both values and metadata unchanged.
template <typename Scalar>
TimeSeriesPanel<Scalar> demean(TimeSeriesPanel<Scalar> panel) {
  const Vector<Scalar> mu = panel.values.rowwise().mean();
  panel.values.colwise() -= mu;
  if (panel.has_means())
    panel.means += mu;
  else
    panel.means = mu;
  return panel;
}

/// Rescales every series so its mean over [base_begin, base_end) equals 100.
template <typename Scalar>
TimeSeriesPanel<Scalar> rebase_index(TimeSeriesPanel<Scalar> panel, Index base_begin,
                                     Index base_end) {
  const Index t = panel.sample_count();
  if (base_begin < 0 || base_end > t || base_begin >= base_end)
    throw ValidationError("rebase range [" + std::to_string(base_begin) + ", " +
                          std::to_string(base_end) + ") is empty or outside [0, " +
                          std::to_string(t) + ")");
  const Index n = base_end - base_begin;
  for (Index i = 0; i < panel.series_count(); ++i) {
    const auto base = panel.values.row(i).segment(base_begin, n);
    const Scalar mean = base.mean();
    const Scalar scale = base.cwiseAbs().maxCoeff();
    if (std::abs(mean) <= Scalar(1e-14) * std::max(Scalar(1), scale))
      throw ValidationError("series \"" + panel.series_names[i] +
                            "\" has zero mean over the rebase range");
    panel.values.row(i) *= Scalar(100) / mean;
  }
  return panel;
}

}  // namespace mcissa
