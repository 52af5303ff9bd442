#include "lgd/model.hpp"

#include "lgd/errors.hpp"
#include "lgd/normal.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lgd {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("ModelParams: " + what);
}

} // namespace

ModelParams::ModelParams(double p, double rho, double mu, double sigma, double omega)
    : p_(p), rho_(rho), mu_(mu), sigma_(sigma), omega_(omega) {
    require(std::isfinite(p) && p > 0.0 && p < 1.0, "p must lie in (0,1)");
    require(std::isfinite(rho) && rho > 0.0 && rho < 1.0, "rho must lie in (0,1)");
    require(std::isfinite(mu) && mu > 0.0 && mu < 1.0, "mu must lie in (0,1)");
    require(std::isfinite(sigma) && sigma > 0.01 && sigma < 1.0,
            "sigma must lie in (0.01, 1.0)");
    require(std::isfinite(omega) && omega >= 0.0 && omega <= 1.0,
            "omega must lie in [0,1]");
}

double ModelParams::sigma1() const { return sigma_ * std::sqrt(omega_); }
double ModelParams::sigma2() const { return sigma_ * std::sqrt(1.0 - omega_); }

PortfolioSpec PortfolioSpec::homogeneous(std::size_t count) {
    if (count == 0) throw std::invalid_argument("PortfolioSpec: count must be positive");
    return PortfolioSpec(Kind::homogeneous, count, {});
}

PortfolioSpec PortfolioSpec::weighted(std::vector<double> weights) {
    if (weights.empty()) throw std::invalid_argument("PortfolioSpec: empty weight vector");
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw std::invalid_argument("PortfolioSpec: weights must be nonnegative");
        sum += w;
    }
    if (std::fabs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("PortfolioSpec: weights must sum to 1 (got " +
                                    std::to_string(sum) + ")");
    }
    std::size_t n = weights.size();
    return PortfolioSpec(Kind::weighted, n, std::move(weights));
}

PortfolioSpec PortfolioSpec::limiting() {
    return PortfolioSpec(Kind::limiting, 0, {});
}

std::size_t PortfolioSpec::count() const {
    if (kind_ == Kind::limiting) {
        throw std::logic_error("PortfolioSpec: limiting portfolio has no loan count");
    }
    return count_;
}

double PortfolioSpec::weight(std::size_t j) const {
    if (kind_ == Kind::homogeneous) return 1.0 / static_cast<double>(count_);
    if (kind_ == Kind::weighted) return weights_.at(j);
    throw std::logic_error("PortfolioSpec: limiting portfolio has no weights");
}

double conditional_default_prob(const ModelParams& params, double x) {
    const double num = std_normal_quantile(params.p()) - std::sqrt(params.rho()) * x;
    return std_normal_cdf(num / std::sqrt(1.0 - params.rho()));
}

double conditional_expected_loss(const ModelParams& params, double x, SMode mode) {
    const double systematic = 1.0 - params.mu() - params.sigma1() * x;
    if (mode == SMode::linear) return systematic;
    const double s2 = params.sigma2();
    if (s2 <= 0.0) {
        throw DegeneracyError(
            "conditional_expected_loss: omega = 1 leaves no idiosyncratic recovery "
            "variance; use SMode::linear");
    }
    const double zc = systematic / s2;
    return systematic * std_normal_cdf(zc) + s2 * std_normal_pdf(zc);
}

double limiting_loss(const ModelParams& params, double x, SMode mode) {
    return conditional_default_prob(params, x) * conditional_expected_loss(params, x, mode);
}

StressedDecomposition limiting_quantile(const ModelParams& params, double q, SMode mode) {
    if (!(q > 0.0 && q < 1.0)) {
        throw std::domain_error("limiting_quantile: q must lie in (0,1)");
    }
    const double x_star = std_normal_quantile(1.0 - q);
    StressedDecomposition out;
    out.stressed_pd = conditional_default_prob(params, x_star);
    out.stressed_lgd = conditional_expected_loss(params, x_star, mode);
    out.ec = out.stressed_pd * out.stressed_lgd;
    out.q = q;
    return out;
}

} // namespace lgd
