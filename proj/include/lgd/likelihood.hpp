#pragma once

#include "lgd/model.hpp"
#include "lgd/observations.hpp"

#include <vector>

namespace lgd {

/// Distribution used for the default count given the factor.
enum class CountMode { binomial, normal };

/// log f(d | J, lambda) for the conditional default count.
/// binomial: log C(J,d) + d log(lambda) + (J-d) log(1-lambda), via log-gamma.
/// normal:   N(J lambda, J lambda (1-lambda)) log-density evaluated at d.
/// lambda in {0,1} returns 0 when d matches the deterministic outcome and
/// -infinity otherwise (explicit log-zero, not an exception).
double log_default_count_likelihood(long long d, long long J, double lambda,
                                    CountMode mode);

/// log f(r_bar | d, x): normal with mean mu + sigma sqrt(omega) x and
/// variance sigma^2 (1-omega) / d. Requires d >= 1 (zero-default years
/// contribute no recovery term; callers skip them) and omega < 1.
double log_avg_recovery_likelihood(double r_bar, long long d, double x,
                                   const ModelParams& params);

/// Joint log-likelihood conditional on the latent path:
/// sum_t [ log f(d_t | x_t) + 1{d_t>0} log f(r_bar_t | d_t, x_t) ],
/// accumulated in year order. Propagates log-zero.
double log_conditional_joint(const ModelParams& params, const std::vector<double>& path,
                             const ObservationSeries& data, CountMode count_mode);

/// Large-portfolio density of the observed default rate psi.
/// Derivation: in the limit the default rate equals Lambda(X), so with
/// delta = Phi^{-1}(psi) and the inverse map
///   x(delta) = (Phi^{-1}(p) - sqrt(1-rho) delta) / sqrt(rho)
/// the change of variables gives f(psi) = phi(x) |dx/d delta| |d delta/d psi|
/// = phi(x) sqrt((1-rho)/rho) / phi(delta); returned in logs.
double log_default_rate_density(double psi, double p, double rho);

/// Sum of log_default_rate_density over a series of default rates.
double log_default_rate_series_likelihood(const std::vector<double>& psi, double p,
                                          double rho);

/// Gauss-Hermite rule for the weight e^{-u^2}: sum_i w_i g(u_i) ~ integral.
/// Weights are returned in logs so large node counts stay representable.
struct GaussHermiteRule {
    std::vector<double> nodes;
    std::vector<double> log_weights;
};
GaussHermiteRule gauss_hermite(int n);

struct MarginalLikelihoodResult {
    double log_density = 0.0;
    /// |result at 2n nodes - result at n nodes|; log_density is the 2n value.
    double node_doubling_delta = 0.0;
    /// False when the doubling delta exceeds 1e-4 (accuracy warning).
    bool converged = true;
};

/// Marginal joint log-likelihood with the latent factor integrated out by
/// Gauss-Hermite quadrature, per year, summed in log space with max-shift.
/// Requires nodes >= 16.
MarginalLikelihoodResult log_marginal_joint_quadrature(const ModelParams& params,
                                                       const ObservationSeries& data,
                                                       int nodes, CountMode count_mode);

} // namespace lgd
