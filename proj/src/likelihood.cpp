#include "lgd/likelihood.hpp"

#include "lgd/errors.hpp"
#include "lgd/normal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lgd {

namespace {

constexpr double kLogZero = -std::numeric_limits<double>::infinity();
constexpr double kHalfLogPi = 0.5723649429247000870717137; // log(pi)/2

double log_binomial_coefficient(long long J, long long d) {
    return std::lgamma(static_cast<double>(J) + 1.0) -
           std::lgamma(static_cast<double>(d) + 1.0) -
           std::lgamma(static_cast<double>(J - d) + 1.0);
}

} // namespace

double log_default_count_likelihood(long long d, long long J, double lambda,
                                    CountMode mode) {
    if (J < 1 || d < 0 || d > J) {
        throw std::invalid_argument("log_default_count_likelihood: need 0 <= d <= J, J >= 1");
    }
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw std::invalid_argument("log_default_count_likelihood: lambda outside [0,1]");
    }
    if (lambda == 0.0) return d == 0 ? 0.0 : kLogZero;
    if (lambda == 1.0) return d == J ? 0.0 : kLogZero;

    const double dd = static_cast<double>(d);
    const double jj = static_cast<double>(J);
    if (mode == CountMode::binomial) {
        return log_binomial_coefficient(J, d) + dd * std::log(lambda) +
               (jj - dd) * std::log1p(-lambda);
    }
    const double mean = jj * lambda;
    const double var = jj * lambda * (1.0 - lambda);
    const double z = dd - mean;
    return -0.5 * std::log(2.0 * M_PI * var) - z * z / (2.0 * var);
}

double log_avg_recovery_likelihood(double r_bar, long long d, double x,
                                   const ModelParams& params) {
    if (d < 1) {
        throw std::invalid_argument(
            "log_avg_recovery_likelihood: d must be >= 1 (zero-default years are skipped)");
    }
    const double s2 = params.sigma2();
    if (s2 <= 0.0) {
        throw DegeneracyError("log_avg_recovery_likelihood: omega = 1 gives zero variance");
    }
    const double mean = params.mu() + params.sigma1() * x;
    const double var = s2 * s2 / static_cast<double>(d);
    const double z = r_bar - mean;
    return -0.5 * std::log(2.0 * M_PI * var) - z * z / (2.0 * var);
}

double log_conditional_joint(const ModelParams& params, const std::vector<double>& path,
                             const ObservationSeries& data, CountMode count_mode) {
    if (path.size() != data.size()) {
        throw std::invalid_argument("log_conditional_joint: path length must equal T");
    }
    double total = 0.0;
    for (std::size_t t = 0; t < data.size(); ++t) {
        const auto& row = data[t];
        const double lambda = conditional_default_prob(params, path[t]);
        total += log_default_count_likelihood(row.defaults, row.firms, lambda, count_mode);
        if (row.defaults > 0) {
            total += log_avg_recovery_likelihood(*row.avg_recovery, row.defaults, path[t],
                                                 params);
        }
    }
    return total;
}

double log_default_rate_density(double psi, double p, double rho) {
    if (!(psi > 0.0 && psi < 1.0)) {
        throw std::domain_error("log_default_rate_density: psi must lie in (0,1)");
    }
    if (!(p > 0.0 && p < 1.0) || !(rho > 0.0 && rho < 1.0)) {
        throw std::domain_error("log_default_rate_density: p and rho must lie in (0,1)");
    }
    const double delta = std_normal_quantile(psi);
    const double x = (std_normal_quantile(p) - std::sqrt(1.0 - rho) * delta) / std::sqrt(rho);
    return log_std_normal_pdf(x) + 0.5 * std::log((1.0 - rho) / rho) -
           log_std_normal_pdf(delta);
}

double log_default_rate_series_likelihood(const std::vector<double>& psi, double p,
                                          double rho) {
    double total = 0.0;
    for (double v : psi) total += log_default_rate_density(v, p, rho);
    return total;
}

GaussHermiteRule gauss_hermite(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite: n must be positive");
    GaussHermiteRule rule;
    rule.nodes.resize(n);
    rule.log_weights.resize(n);

    // Orthonormal Hermite recurrence; Newton from asymptotic initial guesses.
    // Roots are symmetric, so only the upper half is solved for.
    const int half = (n + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < half; ++i) {
        if (i == 0) {
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        } else if (i == 1) {
            z -= 1.14 * std::pow(n, 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * rule.nodes[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * rule.nodes[1];
        } else {
            z = 2.0 * z - rule.nodes[i - 2];
        }
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 0.7511255444649425; // pi^{-1/4}
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1.0)) * p2 -
                     std::sqrt(static_cast<double>(j) / (j + 1.0)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double dz = p1 / pp;
            z -= dz;
            if (std::fabs(dz) <= 1e-15 * std::max(1.0, std::fabs(z))) break;
        }
        rule.nodes[i] = z;
        rule.nodes[n - 1 - i] = -z;
        const double log_w = std::log(2.0) - 2.0 * std::log(std::fabs(pp));
        rule.log_weights[i] = log_w;
        rule.log_weights[n - 1 - i] = log_w;
    }
    if (n % 2 == 1) rule.nodes[half - 1] = 0.0;
    // Nodes ascend for predictable summation order.
    std::reverse(rule.nodes.begin(), rule.nodes.end());
    std::reverse(rule.log_weights.begin(), rule.log_weights.end());
    return rule;
}

namespace {

// One year's marginal log f(d_t, r_bar_t) = log integral f(r|d,x) f(d|x) phi(x) dx,
// computed with the substitution x = sqrt(2) u against the e^{-u^2} weight.
double year_marginal(const ModelParams& params, const YearObservation& row,
                     const GaussHermiteRule& rule, CountMode count_mode) {
    const std::size_t n = rule.nodes.size();
    std::vector<double> terms(n);
    double max_term = kLogZero;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = M_SQRT2 * rule.nodes[i];
        const double lambda = conditional_default_prob(params, x);
        double lg = log_default_count_likelihood(row.defaults, row.firms, lambda, count_mode);
        if (row.defaults > 0) {
            lg += log_avg_recovery_likelihood(*row.avg_recovery, row.defaults, x, params);
        }
        terms[i] = rule.log_weights[i] - kHalfLogPi + lg;
        max_term = std::max(max_term, terms[i]);
    }
    if (max_term == kLogZero) return kLogZero;
    double acc = 0.0;
    for (double term : terms) {
        if (term != kLogZero) acc += std::exp(term - max_term);
    }
    return max_term + std::log(acc);
}

double marginal_total(const ModelParams& params, const ObservationSeries& data, int nodes,
                      CountMode count_mode) {
    const GaussHermiteRule rule = gauss_hermite(nodes);
    double total = 0.0;
    for (const auto& row : data) total += year_marginal(params, row, rule, count_mode);
    return total;
}

} // namespace

MarginalLikelihoodResult log_marginal_joint_quadrature(const ModelParams& params,
                                                       const ObservationSeries& data,
                                                       int nodes, CountMode count_mode) {
    if (nodes < 16) {
        throw std::invalid_argument("log_marginal_joint_quadrature: nodes must be >= 16");
    }
    const double coarse = marginal_total(params, data, nodes, count_mode);
    const double fine = marginal_total(params, data, 2 * nodes, count_mode);
    MarginalLikelihoodResult out;
    out.log_density = fine;
    out.node_doubling_delta = std::fabs(fine - coarse);
    out.converged = out.node_doubling_delta <= 1e-4;
    return out;
}

} // namespace lgd
