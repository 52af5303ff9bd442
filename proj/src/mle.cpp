#include "lgd/mle.hpp"

#include "lgd/errors.hpp"
#include "lgd/normal.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lgd {

DefaultFit fit_default_mle(const std::vector<double>& psi) {
    const std::size_t T = psi.size();
    if (T < 2) throw DataError("fit_default_mle: need at least 2 years");

    DefaultFit fit;
    fit.delta.resize(T);
    for (std::size_t t = 0; t < T; ++t) {
        if (!(psi[t] > 0.0 && psi[t] < 1.0)) {
            throw DataError("fit_default_mle: default rate at index " + std::to_string(t) +
                            " is not strictly inside (0,1); the closed-form MLE is "
                            "undefined there (the MCMC estimator handles such years)");
        }
        fit.delta[t] = std_normal_quantile(psi[t]);
    }

    double mean = 0.0;
    for (double v : fit.delta) mean += v;
    mean /= static_cast<double>(T);
    double var = 0.0;
    for (double v : fit.delta) var += (v - mean) * (v - mean);
    var /= static_cast<double>(T);

    fit.delta_bar = mean;
    fit.delta_var = var;
    fit.rho_hat = var / (1.0 + var);
    fit.p_hat = std_normal_cdf(mean / std::sqrt(1.0 + var));
    fit.degenerate = (var == 0.0);
    return fit;
}

std::vector<double> estimate_latent_path(const std::vector<double>& psi, double p,
                                         double rho) {
    if (!(rho > 0.0)) {
        throw DegeneracyError("estimate_latent_path: rho must be positive");
    }
    if (!(rho < 1.0) || !(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("estimate_latent_path: parameters out of range");
    }
    const double g = std_normal_quantile(p);
    const double sqrt_rho = std::sqrt(rho);
    const double sqrt_1m_rho = std::sqrt(1.0 - rho);
    std::vector<double> path(psi.size());
    for (std::size_t t = 0; t < psi.size(); ++t) {
        path[t] = (g - sqrt_1m_rho * std_normal_quantile(psi[t])) / sqrt_rho;
    }
    return path;
}

RecoveryFit fit_recovery_mle(const std::vector<double>& r_bar,
                             const std::vector<long long>& d,
                             const std::vector<double>& path) {
    const std::size_t T = r_bar.size();
    if (d.size() != T || path.size() != T) {
        throw std::invalid_argument("fit_recovery_mle: series lengths differ");
    }
    if (T < 3) throw DataError("fit_recovery_mle: need at least 3 years");

    double sw = 0.0, swx = 0.0, swxx = 0.0, swr = 0.0, swrx = 0.0;
    for (std::size_t t = 0; t < T; ++t) {
        if (d[t] < 1) {
            throw std::invalid_argument("fit_recovery_mle: all included years need d >= 1");
        }
        const double w = static_cast<double>(d[t]);
        sw += w;
        swx += w * path[t];
        swxx += w * path[t] * path[t];
        swr += w * r_bar[t];
        swrx += w * r_bar[t] * path[t];
    }

    // Normal equations for (mu, sigma1); equivalent to the textbook quotient
    // forms wherever those are defined, and well-posed when swx = 0.
    const double det = sw * swxx - swx * swx;
    if (!(det > 1e-12 * std::max(sw * swxx, swx * swx))) {
        throw DegeneracyError(
            "fit_recovery_mle: factor values are (numerically) constant, the regression "
            "design is singular");
    }

    RecoveryFit fit;
    fit.mu_hat = (swxx * swr - swx * swrx) / det;
    fit.sigma1_hat = (sw * swrx - swx * swr) / det;

    double rss = 0.0;
    for (std::size_t t = 0; t < T; ++t) {
        const double e = r_bar[t] - fit.mu_hat - fit.sigma1_hat * path[t];
        rss += static_cast<double>(d[t]) * e * e;
    }
    fit.sigma2_hat = std::sqrt(rss / static_cast<double>(T));

    const double s1sq = fit.sigma1_hat * fit.sigma1_hat;
    const double s2sq = fit.sigma2_hat * fit.sigma2_hat;
    if (s2sq == 0.0) {
        fit.omega_degenerate = true;
        fit.omega_hat = 1.0;
        fit.sigma_hat = std::fabs(fit.sigma1_hat);
    } else {
        fit.omega_hat = s1sq / (s1sq + s2sq);
        fit.sigma_hat = std::sqrt(s1sq + s2sq);
    }
    fit.negative_sigma1 = fit.sigma1_hat < 0.0;
    return fit;
}

MleFit fit_mle(const ObservationSeries& data) {
    const std::size_t T = data.size();
    if (T < 2) throw DataError("fit_mle: need at least 2 years");
    for (std::size_t t = 0; t < T; ++t) {
        const auto& row = data[t];
        if (row.defaults == 0 || row.defaults == row.firms) {
            throw DataError("fit_mle: default rate in year " + std::to_string(row.year) +
                            " is degenerate (0 or 1); the closed-form MLE requires "
                            "0 < d_t < J_t, use fit-mcmc for such data");
        }
    }

    MleFit fit;
    fit.default_fit = fit_default_mle(data.default_rates());
    if (fit.default_fit.degenerate) {
        fit.warnings.push_back(
            "constant default-rate series: rho_hat = 0, factor path and recovery "
            "parameters cannot be estimated");
        return fit;
    }

    fit.path = estimate_latent_path(data.default_rates(), fit.default_fit.p_hat,
                                    fit.default_fit.rho_hat);

    std::vector<double> r_bar(T);
    std::vector<long long> d(T);
    for (std::size_t t = 0; t < T; ++t) {
        r_bar[t] = *data[t].avg_recovery;
        d[t] = data[t].defaults;
    }
    fit.recovery = fit_recovery_mle(r_bar, d, fit.path);

    if (fit.recovery->negative_sigma1) {
        fit.warnings.push_back(
            "model inconsistency: fitted systematic recovery slope sigma1 is negative "
            "(recoveries rise in bad years); omega absorbs the sign");
    }
    if (fit.recovery->omega_degenerate) {
        fit.warnings.push_back(
            "perfect recovery fit: sigma2 = 0 forces omega = 1, which the MCMC sampler "
            "and the exact S mode cannot use");
    }

    try {
        fit.params.emplace(fit.default_fit.p_hat, fit.default_fit.rho_hat,
                           fit.recovery->mu_hat, fit.recovery->sigma_hat,
                           fit.recovery->omega_hat);
    } catch (const std::invalid_argument& err) {
        throw DegeneracyError(std::string("fit_mle: point estimates fall outside the "
                                          "model's parameter support: ") +
                              err.what());
    }
    return fit;
}

} // namespace lgd
