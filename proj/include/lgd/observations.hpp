#pragma once

#include <optional>
#include <vector>

namespace lgd {

/// One year of aggregate data: portfolio size, default count, and the
/// average recovery rate over the defaulted loans (absent when none defaulted).
struct YearObservation {
    int year = 0;
    long long firms = 0;
    long long defaults = 0;
    std::optional<double> avg_recovery;
};

/// Validated annual default/recovery series. Years strictly increasing,
/// 0 <= d_t <= J_t, avg_recovery present exactly when d_t > 0.
/// Estimators additionally require T >= 2; single-year series are allowed
/// here so per-year likelihood terms can be exercised in isolation.
class ObservationSeries {
public:
    explicit ObservationSeries(std::vector<YearObservation> rows);

    std::size_t size() const { return rows_.size(); }
    const YearObservation& operator[](std::size_t t) const { return rows_[t]; }
    auto begin() const { return rows_.begin(); }
    auto end() const { return rows_.end(); }

    /// psi_t = d_t / J_t.
    double default_rate(std::size_t t) const;
    std::vector<double> default_rates() const;

private:
    std::vector<YearObservation> rows_;
};

} // namespace lgd
