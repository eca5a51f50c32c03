#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "benford/analyze.hpp"
#include "benford/density.hpp"
#include "benford/digits.hpp"
#include "benford/sample.hpp"

namespace benford {

// Density spec: {"pieces":[{"lo","hi","shape":{"kind",...},"weight"}]}
// with kind in {"constant","linear","sine_bump","tabulated"}. Windowed
// shapes carry optional "u0"/"u1". Malformed input throws DataError.
nlohmann::json density_to_json(const PiecewiseDensity& d);
PiecewiseDensity density_from_json(const nlohmann::json& j);
void save_density(const PiecewiseDensity& d, const std::filesystem::path& path);
PiecewiseDensity load_density(const std::filesystem::path& path);

// "block,probability" rows in block order.
std::string digit_distribution_csv(const DigitDistribution& d);
nlohmann::json digit_distribution_json(const DigitDistribution& d);

// One value per line.
void write_samples_text(const SampleSet& s, std::ostream& out);
// Same with a "# seed=... count=... source=..." comment and a header row.
void write_samples_csv(const SampleSet& s, std::ostream& out);
void save_samples(const SampleSet& s, const std::filesystem::path& path, bool csv);

nlohmann::json fit_report_json(const FitReport& r);
std::string fit_report_text(const FitReport& r);

nlohmann::json invariance_report_json(const InvarianceReport& r);
std::string invariance_report_text(const InvarianceReport& r);

std::string histogram_csv(const Histogram& h);

// Fixed-format float used everywhere text output must be byte-stable.
std::string format_double(double x);

} // namespace benford
