#pragma once

#include <cstddef>
#include <vector>

namespace lgd {

/// How the conditional expected loss rate S(x) is evaluated.
/// `exact` is the model's true conditional expectation of max(1-R,0);
/// `linear` drops the cap and returns E[1-R | x], which is the form the
/// reference results were produced with.
enum class SMode { exact, linear };

/// The five model parameters theta = (p, rho, mu, sigma, omega).
/// Construction validates the support bounds:
///   p, rho, mu in (0,1); sigma in (0.01, 1.0); omega in [0,1].
class ModelParams {
public:
    ModelParams(double p, double rho, double mu, double sigma, double omega);

    double p() const { return p_; }
    double rho() const { return rho_; }
    double mu() const { return mu_; }
    double sigma() const { return sigma_; }
    double omega() const { return omega_; }

    /// Systematic recovery volatility sigma*sqrt(omega).
    double sigma1() const;
    /// Idiosyncratic recovery volatility sigma*sqrt(1-omega).
    double sigma2() const;

private:
    double p_, rho_, mu_, sigma_, omega_;
};

/// A portfolio is either a homogeneous pool of J equal-weight loans, an
/// explicit weight vector summing to 1, or the limiting (J = infinity)
/// portfolio where idiosyncratic risk has been diversified away.
class PortfolioSpec {
public:
    enum class Kind { homogeneous, weighted, limiting };

    static PortfolioSpec homogeneous(std::size_t count);
    static PortfolioSpec weighted(std::vector<double> weights);
    static PortfolioSpec limiting();

    Kind kind() const { return kind_; }
    bool is_limiting() const { return kind_ == Kind::limiting; }
    /// Number of loans; invalid for the limiting portfolio.
    std::size_t count() const;
    /// Weight of loan j.
    double weight(std::size_t j) const;

private:
    PortfolioSpec(Kind kind, std::size_t count, std::vector<double> weights)
        : kind_(kind), count_(count), weights_(std::move(weights)) {}

    Kind kind_;
    std::size_t count_ = 0;
    std::vector<double> weights_;
};

/// EC = stressed PD x stressed LGD at quantile level q.
struct StressedDecomposition {
    double stressed_pd = 0.0;
    double stressed_lgd = 0.0;
    double ec = 0.0;
    double q = 0.0;
};

/// Lambda(x) = Phi((Phi^{-1}(p) - sqrt(rho) x) / sqrt(1-rho)),
/// the default probability conditional on the systematic factor.
double conditional_default_prob(const ModelParams& params, double x);

/// S(x), the expected loss rate conditional on the factor.
/// exact:  (1-mu-sigma sqrt(omega) x) Phi(z_c) + sigma sqrt(1-omega) phi(z_c),
///         z_c = (1-mu-sigma sqrt(omega) x) / (sigma sqrt(1-omega));
///         requires omega < 1 (throws DegeneracyError otherwise).
/// linear: 1 - mu - sigma sqrt(omega) x.
double conditional_expected_loss(const ModelParams& params, double x, SMode mode);

/// Limiting-portfolio loss rate L_inf(x) = Lambda(x) * S(x).
double limiting_loss(const ModelParams& params, double x, SMode mode);

/// Quantile of L_inf(X) at level q: evaluates the decomposition at
/// x* = Phi^{-1}(1-q). Throws std::domain_error for q outside (0,1).
StressedDecomposition limiting_quantile(const ModelParams& params, double q, SMode mode);

} // namespace lgd
