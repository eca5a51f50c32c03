#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "benford/digits.hpp"
#include "benford/sample.hpp"

namespace benford {

// Pearson goodness-of-fit of an empirical digit distribution against a
// theoretical one.
struct FitReport {
    int length = 0;
    std::uint64_t count = 0;
    int dof = 0;
    double chi_square = 0.0;
    double p_value = 0.0;
    double mad = 0.0;          // mean |empirical - theoretical|
    double max_abs_dev = 0.0;
    DigitDistribution empirical;
    DigitDistribution theoretical;
};

// Digit distributions across a grid of scale factors, with total-variation
// deviation from the unscaled distribution.
struct InvarianceReport {
    int length = 0;
    std::vector<double> parameters;
    std::vector<DigitDistribution> distributions;
    std::vector<double> deviations;
    double max_deviation = 0.0;
};

// Length-n block frequencies of the samples. Throws DataError naming the
// first non-positive row.
DigitDistribution empirical_digit_distribution(const SampleSet& samples, int n);

// chi2 = sum (O-E)^2/E over the cells; exposed for single-cell checks.
double chi_square_statistic(std::span<const double> observed, std::span<const double> expected);

// Requires empirical count metadata and a strictly positive theoretical
// distribution. dof = cells - 1; p-value from the chi-square survival
// function.
FitReport fit_report(const DigitDistribution& empirical, const DigitDistribution& theoretical);

// For each scale c, the length-n digit distribution of the density scaled
// by c -- i.e. the mod-1 projection translated by log10(c) -- compared with
// the unscaled distribution by total variation.
InvarianceReport scale_invariance_report(const PiecewiseDensity& g,
                                         std::span<const double> scales, int n);

inline constexpr std::size_t kMaxDigitBlocks = 10000;

// Digit-block distribution of Y in base b: rebase g, project mod 1,
// integrate over the base-b block intervals. Throws LimitError when the
// block count (b-1)*b^(n-1) exceeds max_blocks.
DigitDistribution base_digit_distribution(const PiecewiseDensity& g, int base, int n,
                                          std::size_t max_blocks = kMaxDigitBlocks);

// Ingestion outcome: values kept plus an account of every rejected row.
struct IngestReport {
    SampleSet samples;
    std::uint64_t rows_total = 0;
    std::uint64_t rows_used = 0;
    std::uint64_t excluded_nonpositive = 0;
    std::uint64_t excluded_non_numeric = 0;
    // (line number, description) of the first few rejected rows.
    std::vector<std::pair<std::uint64_t, std::string>> first_bad_rows;
};

// Reads a numeric dataset: CSV with a header (column selected by name or
// 0-based index) or headerless one-value-per-line text. '#' lines are
// comments. Decimal and scientific notation, dot separator only.
// Zero/negative/non-numeric rows are counted and reported, never silently
// dropped. Throws DataError if the file is unreadable or no row parses.
IngestReport ingest_dataset(const std::filesystem::path& path, const std::string& column = {});

struct Histogram {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<std::uint64_t> counts;
    std::uint64_t below = 0;
    std::uint64_t above = 0;
};

// Equal-width bins over [lo,hi); out-of-range values land in below/above.
Histogram make_histogram(std::span<const double> values, std::size_t bins, double lo, double hi);

} // namespace benford
