#pragma once

#include "allclear/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace allclear {

// Contiguous index range [start, end) over a series.
struct Interval {
    std::size_t start = 0;
    std::size_t end = 0;

    std::size_t length() const { return end - start; }
    bool operator==(const Interval&) const = default;
};

// Order is fixed: the feature-column layout depends on it.
struct IntervalSet {
    std::vector<Interval> intervals;
    std::size_t series_length = 0;
};

inline constexpr std::size_t kDefaultMinIntervalLength = 3;

// Draws `count` intervals: length uniform on [min_len, n], then start
// uniform on [0, n - length]. Duplicates are permitted.
IntervalSet sample_intervals(std::size_t n, std::size_t count, std::size_t min_len,
                             std::uint64_t rng_seed);
IntervalSet sample_intervals(std::size_t n, std::size_t count, std::size_t min_len, Rng& rng);

double interval_mean(std::span<const double> series, const Interval& iv);
// Sample standard deviation (divisor length-1); 0 for a single element.
double interval_std(std::span<const double> series, const Interval& iv);
// OLS slope of value against 0-based position within the interval.
double interval_slope(std::span<const double> series, const Interval& iv);

// Feature row layout: [mean0, std0, slope0, mean1, std1, slope1, ...].
std::vector<double> extract_features(std::span<const double> series, const IntervalSet& ivs);
void extract_features_into(std::span<const double> series, const IntervalSet& ivs,
                           std::span<double> out);

} // namespace allclear
