#include "benford/analyze.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "benford/errors.hpp"
#include "benford/special.hpp"

namespace benford {

DigitDistribution empirical_digit_distribution(const SampleSet& samples, int n) {
    if (n < 1) throw std::invalid_argument("empirical distribution: n must be >= 1");
    std::int64_t first = 1;
    for (int i = 1; i < n; ++i) first *= 10;
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(9 * first), 0);
    for (std::size_t row = 0; row < samples.values.size(); ++row) {
        const double v = samples.values[row];
        if (!(v > 0.0) || !std::isfinite(v))
            throw DataError("non-positive value at row " + std::to_string(row + 1));
        const DigitBlock block = extract_digits(v, n);
        ++counts[static_cast<std::size_t>(block.value() - first)];
    }
    return DigitDistribution::from_counts(10, n, std::move(counts));
}

double chi_square_statistic(std::span<const double> observed, std::span<const double> expected) {
    if (observed.size() != expected.size())
        throw std::invalid_argument("chi-square: cell count mismatch");
    double chi2 = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (!(expected[i] > 0.0))
            throw std::invalid_argument("chi-square: expected counts must be positive");
        const double d = observed[i] - expected[i];
        chi2 += d * d / expected[i];
    }
    return chi2;
}

FitReport fit_report(const DigitDistribution& empirical, const DigitDistribution& theoretical) {
    if (empirical.base() != theoretical.base() || empirical.length() != theoretical.length())
        throw std::invalid_argument("fit report: distributions are not comparable");
    if (!empirical.total_count())
        throw std::invalid_argument("fit report: empirical distribution has no count metadata");

    const auto total = *empirical.total_count();
    std::vector<double> observed(empirical.size());
    if (empirical.counts()) {
        const auto& c = *empirical.counts();
        for (std::size_t i = 0; i < c.size(); ++i) observed[i] = static_cast<double>(c[i]);
    } else {
        for (std::size_t i = 0; i < observed.size(); ++i)
            observed[i] = empirical.probabilities()[i] * static_cast<double>(total);
    }
    std::vector<double> expected(theoretical.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (!(theoretical.probabilities()[i] > 0.0))
            throw std::invalid_argument("fit report: theoretical distribution must be positive");
        expected[i] = theoretical.probabilities()[i] * static_cast<double>(total);
    }

    FitReport r{.length = empirical.length(),
                .count = total,
                .dof = static_cast<int>(empirical.size()) - 1,
                .chi_square = chi_square_statistic(observed, expected),
                .p_value = 0.0,
                .mad = 0.0,
                .max_abs_dev = 0.0,
                .empirical = empirical,
                .theoretical = theoretical};
    r.p_value = chi_square_sf(r.chi_square, r.dof);
    for (std::size_t i = 0; i < empirical.size(); ++i) {
        const double dev = std::abs(empirical.probabilities()[i] - theoretical.probabilities()[i]);
        r.mad += dev;
        r.max_abs_dev = std::max(r.max_abs_dev, dev);
    }
    r.mad /= static_cast<double>(empirical.size());
    return r;
}

InvarianceReport scale_invariance_report(const PiecewiseDensity& g,
                                         std::span<const double> scales, int n) {
    const Mod1Density g_dag = mod1_project(g);
    const DigitDistribution reference = full_digit_distribution(g_dag, n);

    InvarianceReport report;
    report.length = n;
    for (double c : scales) {
        if (!(c > 0.0)) throw std::invalid_argument("invariance: scales must be positive");
        const Mod1Density shifted = translate_mod1(g_dag, std::log10(c));
        DigitDistribution dist = full_digit_distribution(shifted, n);
        const double dev = total_variation(dist, reference);
        report.parameters.push_back(c);
        report.distributions.push_back(std::move(dist));
        report.deviations.push_back(dev);
        report.max_deviation = std::max(report.max_deviation, dev);
    }
    return report;
}

DigitDistribution base_digit_distribution(const PiecewiseDensity& g, int base, int n,
                                          std::size_t max_blocks) {
    if (base < 2) throw std::invalid_argument("base distribution: base must be >= 2");
    if (n < 1) throw std::invalid_argument("base distribution: n must be >= 1");
    std::int64_t first = 1;
    for (int i = 1; i < n; ++i) {
        first *= base;
        if (first > static_cast<std::int64_t>(max_blocks)) break;
    }
    const std::int64_t blocks = (base - 1) * first;
    if (blocks > static_cast<std::int64_t>(max_blocks))
        throw LimitError("base distribution: " + std::to_string(blocks) +
                         " blocks exceed the limit of " + std::to_string(max_blocks));

    const Mod1Density g_dag = mod1_project(rebase_log_density(g, base));
    std::vector<double> probs(static_cast<std::size_t>(blocks));
    for (std::size_t i = 0; i < probs.size(); ++i) {
        const std::int64_t v = first + static_cast<std::int64_t>(i);
        probs[i] = g_dag.integrate(log_mantissa_bound(v, n, base),
                                   log_mantissa_bound(v + 1, n, base));
    }
    return DigitDistribution(base, n, std::move(probs));
}

namespace {

bool parse_number(std::string_view token, double& out) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            fields.push_back(trim(line.substr(start, i - start)));
            start = i + 1;
        }
    }
    return fields;
}

} // namespace

IngestReport ingest_dataset(const std::filesystem::path& path, const std::string& column) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path.string() + "'");

    IngestReport report;
    report.samples.source = path.string();

    std::string line;
    std::uint64_t line_no = 0;
    bool header_done = false;
    bool csv_mode = false;
    std::size_t column_index = 0;

    auto note_bad = [&](std::uint64_t ln, const std::string& why) {
        if (report.first_bad_rows.size() < 10) report.first_bad_rows.emplace_back(ln, why);
    };
    auto take_value = [&](std::string_view token, std::uint64_t ln) {
        double v = 0.0;
        if (!parse_number(token, v)) {
            ++report.rows_total;
            ++report.excluded_non_numeric;
            note_bad(ln, "non-numeric value '" + std::string(token) + "'");
            return;
        }
        ++report.rows_total;
        if (!(v > 0.0)) {
            ++report.excluded_nonpositive;
            note_bad(ln, "non-positive value " + std::string(token));
            return;
        }
        ++report.rows_used;
        report.samples.values.push_back(v);
    };

    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view sv = trim(line);
        if (sv.empty() || sv.front() == '#') continue;

        if (!header_done) {
            header_done = true;
            const auto fields = split_csv(sv);
            csv_mode = fields.size() > 1 || !column.empty();
            if (csv_mode) {
                // Resolve the column by header name, then by 0-based index.
                bool header_row = false;
                if (!column.empty()) {
                    auto it = std::find(fields.begin(), fields.end(), std::string_view(column));
                    if (it != fields.end()) {
                        column_index = static_cast<std::size_t>(std::distance(fields.begin(), it));
                        header_row = true;
                    } else {
                        std::size_t idx = 0;
                        auto [p, ec] =
                            std::from_chars(column.data(), column.data() + column.size(), idx);
                        if (ec != std::errc{} || p != column.data() + column.size() ||
                            idx >= fields.size())
                            throw DataError("column '" + column + "' not found in '" +
                                            path.string() + "'");
                        column_index = idx;
                    }
                } else {
                    throw DataError("multi-column file '" + path.string() +
                                    "' needs a column selector");
                }
                if (!header_row) {
                    // A numeric first row is data, not a header.
                    double probe = 0.0;
                    if (parse_number(fields[column_index], probe))
                        take_value(fields[column_index], line_no);
                }
                continue;
            }
            // Single column: a non-numeric first token is a header line.
            double probe = 0.0;
            if (!parse_number(fields.front(), probe)) continue;
        }

        if (csv_mode) {
            const auto fields = split_csv(sv);
            if (column_index >= fields.size()) {
                ++report.rows_total;
                ++report.excluded_non_numeric;
                note_bad(line_no, "missing column");
                continue;
            }
            take_value(fields[column_index], line_no);
        } else {
            // Plain text: whitespace-separated values, usually one per line.
            std::istringstream ss{std::string(sv)};
            std::string token;
            while (ss >> token) take_value(token, line_no);
        }
    }

    if (report.rows_used == 0)
        throw DataError("no parseable positive values in '" + path.string() + "'");
    report.samples.count = report.samples.values.size();
    return report;
}

Histogram make_histogram(std::span<const double> values, std::size_t bins, double lo, double hi) {
    if (bins == 0) throw std::invalid_argument("histogram: need at least one bin");
    if (!(lo < hi)) throw std::invalid_argument("histogram: need lo < hi");
    Histogram h;
    h.lo = lo;
    h.hi = hi;
    h.counts.assign(bins, 0);
    const double width = (hi - lo) / static_cast<double>(bins);
    for (double v : values) {
        if (v < lo) {
            ++h.below;
        } else if (v >= hi) {
            ++h.above;
        } else {
            auto idx = static_cast<std::size_t>((v - lo) / width);
            ++h.counts[std::min(idx, bins - 1)];
        }
    }
    return h;
}

} // namespace benford
