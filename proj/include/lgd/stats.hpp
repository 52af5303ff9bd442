#pragma once

#include <string>
#include <vector>

namespace lgd {

/// Empirical quantile by order statistics: rank h = q(n+1) clamped to [1,n],
/// linear interpolation between the adjacent order statistics. `sorted` must
/// be ascending.
double empirical_quantile_sorted(const std::vector<double>& sorted, double q);

/// Convenience overload that copies and sorts.
double empirical_quantile(std::vector<double> values, double q);

/// Half-width estimate of the Monte Carlo error of an empirical quantile,
/// from the order-statistic spacing at rank +- sqrt(n q (1-q)).
double empirical_quantile_stderr(const std::vector<double>& sorted, double q);

/// Summary statistics of one sample column. Kurtosis is the raw standardized
/// fourth moment (normal = 3). Mode is the midpoint of the tallest bin of a
/// Freedman-Diaconis histogram. Constant columns report stdev 0, CV 0 and
/// undefined skewness/kurtosis (moments_defined = false).
struct SummaryRow {
    std::string name;
    double mean = 0.0;
    double mode = 0.0;
    double stdev = 0.0;
    double skewness = 0.0;
    double kurtosis = 0.0;
    double cv = 0.0;
    double q25 = 0.0;
    double q50 = 0.0;
    double q75 = 0.0;
    bool moments_defined = true;
};

SummaryRow summarize_samples(std::string name, std::vector<double> values);

} // namespace lgd
