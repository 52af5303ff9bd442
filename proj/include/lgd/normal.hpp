#pragma once

#include <cmath>

namespace lgd {

inline constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599; // 1/sqrt(2*pi)
inline constexpr double kLogSqrt2Pi = 0.9189385332046727417803297364; // log(sqrt(2*pi))

inline double std_normal_pdf(double x) {
    return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

inline double log_std_normal_pdf(double x) {
    return -0.5 * x * x - kLogSqrt2Pi;
}

/// Phi(x) via erfc; absolute error well below 1e-10 over the whole real line.
inline double std_normal_cdf(double x) {
    return 0.5 * std::erfc(-x * M_SQRT1_2);
}

/// log Phi(x), stable in the far left tail where erfc underflows.
double log_std_normal_cdf(double x);

/// Phi^{-1}(q) for q in (0,1); throws std::domain_error at the endpoints.
/// Wichura's AS 241 (PPND16) rational approximation, ~1e-15 relative error.
double std_normal_quantile(double q);

} // namespace lgd
