#pragma once

#include "lgd/model.hpp"
#include "lgd/observations.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lgd {

/// Stage one: default-rate parameters and the transformed-rate intermediates.
struct DefaultFit {
    double p_hat = 0.0;
    double rho_hat = 0.0;
    std::vector<double> delta; // Phi^{-1}(psi_t)
    double delta_bar = 0.0;
    double delta_var = 0.0;    // population (1/T) variance
    /// Constant series: rho_hat = 0, factor estimation impossible.
    bool degenerate = false;
};

/// Stage two: recovery parameters from the weighted regression on the path.
struct RecoveryFit {
    double mu_hat = 0.0;
    double sigma_hat = 0.0;
    double omega_hat = 0.0;
    double sigma1_hat = 0.0; // signed regression slope sigma*sqrt(omega)
    double sigma2_hat = 0.0;
    /// sigma2_hat = 0 (perfect fit): omega_hat forced to 1.
    bool omega_degenerate = false;
    /// Negative slope: recoveries fall when the factor rises, which the
    /// parameterization cannot represent; the sign is lost in omega_hat.
    bool negative_sigma1 = false;
};

struct MleFit {
    DefaultFit default_fit;
    std::vector<double> path; // empty when the default fit is degenerate
    std::optional<RecoveryFit> recovery;
    std::optional<ModelParams> params;
    std::vector<std::string> warnings;
};

/// Closed-form MLEs for (p, rho) from default rates:
///   rho = var(delta) / (1 + var(delta)),  p = Phi(mean(delta)/sqrt(1+var(delta)))
/// with population variance. Every psi_t must lie strictly in (0,1).
DefaultFit fit_default_mle(const std::vector<double>& psi);

/// Factor estimates x_t = (Phi^{-1}(p) - sqrt(1-rho) Phi^{-1}(psi_t)) / sqrt(rho).
std::vector<double> estimate_latent_path(const std::vector<double>& psi, double p,
                                         double rho);

/// Closed-form recovery MLEs: (mu, sigma1) solve the d_t-weighted least-squares
/// normal equations of r_bar_t on x_t; sigma2^2 = (1/T) sum d_t residual^2.
/// Requires T >= 3 and all d_t >= 1.
RecoveryFit fit_recovery_mle(const std::vector<double>& r_bar,
                             const std::vector<long long>& d,
                             const std::vector<double>& path);

/// Two-stage estimator: default parameters, then the latent path, then the
/// recovery regression. A constant default-rate series returns a degenerate
/// fit (rho = 0) with a warning instead of failing.
MleFit fit_mle(const ObservationSeries& data);

} // namespace lgd
