#include "lgd/observations.hpp"

#include "lgd/errors.hpp"

#include <cmath>
#include <string>

namespace lgd {

namespace {

std::string year_tag(const YearObservation& row) {
    return "year " + std::to_string(row.year);
}

} // namespace

ObservationSeries::ObservationSeries(std::vector<YearObservation> rows)
    : rows_(std::move(rows)) {
    if (rows_.empty()) throw DataError("ObservationSeries: no observations");
    for (std::size_t t = 0; t < rows_.size(); ++t) {
        const auto& row = rows_[t];
        if (t > 0 && row.year <= rows_[t - 1].year) {
            throw DataError("ObservationSeries: years must be strictly increasing at " +
                            year_tag(row));
        }
        if (row.firms <= 0) {
            throw DataError("ObservationSeries: firms must be positive at " + year_tag(row));
        }
        if (row.defaults < 0 || row.defaults > row.firms) {
            throw DataError("ObservationSeries: defaults outside [0, firms] at " +
                            year_tag(row));
        }
        if (row.defaults > 0) {
            if (!row.avg_recovery.has_value()) {
                throw DataError("ObservationSeries: avg_recovery missing for defaulting " +
                                year_tag(row));
            }
            if (!std::isfinite(*row.avg_recovery)) {
                throw DataError("ObservationSeries: avg_recovery not finite at " +
                                year_tag(row));
            }
        } else if (row.avg_recovery.has_value()) {
            throw DataError("ObservationSeries: avg_recovery given for zero-default " +
                            year_tag(row));
        }
    }
}

double ObservationSeries::default_rate(std::size_t t) const {
    const auto& row = rows_.at(t);
    return static_cast<double>(row.defaults) / static_cast<double>(row.firms);
}

std::vector<double> ObservationSeries::default_rates() const {
    std::vector<double> psi(rows_.size());
    for (std::size_t t = 0; t < rows_.size(); ++t) psi[t] = default_rate(t);
    return psi;
}

} // namespace lgd
