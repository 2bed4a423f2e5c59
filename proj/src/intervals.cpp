#include "allclear/intervals.hpp"

#include "allclear/errors.hpp"

#include <cassert>
#include <cmath>
#include <string>

namespace allclear {

IntervalSet sample_intervals(std::size_t n, std::size_t count, std::size_t min_len, Rng& rng) {
    if (min_len == 0) throw ConfigError("sample_intervals: min_len must be positive");
    if (n < min_len) {
        throw ConfigError("sample_intervals: series length " + std::to_string(n) +
                          " is shorter than the minimum interval length " + std::to_string(min_len));
    }
    if (count == 0) throw ConfigError("sample_intervals: count must be positive");
    IntervalSet set;
    set.series_length = n;
    set.intervals.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto length = static_cast<std::size_t>(
            rng.uniform_int(static_cast<std::int64_t>(min_len), static_cast<std::int64_t>(n)));
        const auto start = static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<std::int64_t>(n - length)));
        set.intervals.push_back(Interval{start, start + length});
    }
    return set;
}

IntervalSet sample_intervals(std::size_t n, std::size_t count, std::size_t min_len,
                             std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    return sample_intervals(n, count, min_len, rng);
}

double interval_mean(std::span<const double> series, const Interval& iv) {
    assert(iv.start < iv.end && iv.end <= series.size());
    double sum = 0.0;
    for (std::size_t i = iv.start; i < iv.end; ++i) sum += series[i];
    return sum / static_cast<double>(iv.length());
}

double interval_std(std::span<const double> series, const Interval& iv) {
    const std::size_t m = iv.length();
    if (m < 2) return 0.0;
    const double mean = interval_mean(series, iv);
    double ss = 0.0;
    for (std::size_t i = iv.start; i < iv.end; ++i) {
        const double d = series[i] - mean;
        ss += d * d;
    }
    return std::sqrt(ss / static_cast<double>(m - 1));
}

double interval_slope(std::span<const double> series, const Interval& iv) {
    const std::size_t m = iv.length();
    if (m < 2) return 0.0;
    // Regressor is the 0-based position x = 0..m-1, so
    // sum (x - xbar)^2 = m (m^2 - 1) / 12 in closed form.
    const double dm = static_cast<double>(m);
    const double xbar = (dm - 1.0) / 2.0;
    const double ybar = interval_mean(series, iv);
    double cov = 0.0;
    for (std::size_t i = iv.start; i < iv.end; ++i) {
        cov += (static_cast<double>(i - iv.start) - xbar) * (series[i] - ybar);
    }
    const double sxx = dm * (dm * dm - 1.0) / 12.0;
    return cov / sxx;
}

void extract_features_into(std::span<const double> series, const IntervalSet& ivs,
                           std::span<double> out) {
    if (series.size() != ivs.series_length) {
        throw DataError("extract_features: series length " + std::to_string(series.size()) +
                        " does not match interval set length " +
                        std::to_string(ivs.series_length));
    }
    assert(out.size() == 3 * ivs.intervals.size());
    std::size_t k = 0;
    for (const Interval& iv : ivs.intervals) {
        out[k++] = interval_mean(series, iv);
        out[k++] = interval_std(series, iv);
        out[k++] = interval_slope(series, iv);
    }
}

std::vector<double> extract_features(std::span<const double> series, const IntervalSet& ivs) {
    std::vector<double> row(3 * ivs.intervals.size());
    extract_features_into(series, ivs, row);
    return row;
}

} // namespace allclear
