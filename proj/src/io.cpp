#include "benford/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "benford/errors.hpp"

namespace benford {

using nlohmann::json;

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::string format_fixed(double x, int places) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", places, x);
    return buf;
}

json shape_to_json(const PieceShape& s) {
    json j;
    j["kind"] = shape_kind_name(s);
    std::visit(
        [&](const auto& sh) {
            using T = std::decay_t<decltype(sh)>;
            if constexpr (std::is_same_v<T, ConstantShape>) {
                j["level"] = sh.level;
            } else if constexpr (std::is_same_v<T, LinearShape>) {
                j["left"] = sh.left;
                j["right"] = sh.right;
            } else if constexpr (std::is_same_v<T, SineBumpShape>) {
                if (sh.win_lo != 0.0 || sh.win_hi != 1.0) {
                    j["u0"] = sh.win_lo;
                    j["u1"] = sh.win_hi;
                }
            } else {
                j["ordinates"] = sh.ordinates;
                if (sh.win_lo != 0.0 || sh.win_hi != 1.0) {
                    j["u0"] = sh.win_lo;
                    j["u1"] = sh.win_hi;
                }
            }
        },
        s);
    return j;
}

double require_number(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw DataError(std::string("density spec: missing numeric field '") + key + "'");
    return j[key].get<double>();
}

PieceShape shape_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw DataError("density spec: shape needs a 'kind' string");
    const std::string kind = j["kind"].get<std::string>();
    const double u0 = j.contains("u0") ? require_number(j, "u0") : 0.0;
    const double u1 = j.contains("u1") ? require_number(j, "u1") : 1.0;
    if (kind == "constant") return ConstantShape{require_number(j, "level")};
    if (kind == "linear") return LinearShape{require_number(j, "left"), require_number(j, "right")};
    if (kind == "sine_bump") return SineBumpShape{u0, u1};
    if (kind == "tabulated") {
        if (!j.contains("ordinates") || !j["ordinates"].is_array())
            throw DataError("density spec: tabulated shape needs an 'ordinates' array");
        std::vector<double> ys;
        for (const auto& v : j["ordinates"]) {
            if (!v.is_number()) throw DataError("density spec: ordinates must be numbers");
            ys.push_back(v.get<double>());
        }
        return TabulatedShape{std::move(ys), u0, u1};
    }
    throw DataError("density spec: unknown shape kind '" + kind + "'");
}

} // namespace

json density_to_json(const PiecewiseDensity& d) {
    json pieces = json::array();
    for (const Piece& p : d.pieces()) {
        pieces.push_back({{"lo", p.lo},
                          {"hi", p.hi},
                          {"shape", shape_to_json(p.shape)},
                          {"weight", p.weight}});
    }
    return json{{"pieces", std::move(pieces)}};
}

PiecewiseDensity density_from_json(const json& j) {
    if (!j.is_object() || !j.contains("pieces") || !j["pieces"].is_array())
        throw DataError("density spec: expected an object with a 'pieces' array");
    std::vector<Piece> pieces;
    for (const auto& pj : j["pieces"]) {
        if (!pj.is_object() || !pj.contains("shape"))
            throw DataError("density spec: each piece needs lo, hi, shape, weight");
        pieces.push_back({require_number(pj, "lo"), require_number(pj, "hi"),
                          shape_from_json(pj["shape"]), require_number(pj, "weight")});
    }
    try {
        return PiecewiseDensity{std::move(pieces)};
    } catch (const std::invalid_argument& e) {
        throw DataError(std::string("density spec: ") + e.what());
    }
}

void save_density(const PiecewiseDensity& d, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write '" + path.string() + "'");
    out << density_to_json(d).dump(2) << '\n';
}

PiecewiseDensity load_density(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path.string() + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw DataError("cannot parse '" + path.string() + "': " + e.what());
    }
    return density_from_json(j);
}

std::string digit_distribution_csv(const DigitDistribution& d) {
    std::string out = "block,probability\n";
    for (std::size_t i = 0; i < d.size(); ++i) {
        out += d.block_label(i);
        out += ',';
        out += format_double(d.probabilities()[i]);
        out += '\n';
    }
    return out;
}

json digit_distribution_json(const DigitDistribution& d) {
    json entries = json::array();
    for (std::size_t i = 0; i < d.size(); ++i) {
        json e{{"block", d.block_label(i)}, {"probability", d.probabilities()[i]}};
        if (d.counts()) e["count"] = (*d.counts())[i];
        entries.push_back(std::move(e));
    }
    json j{{"base", d.base()}, {"length", d.length()}, {"entries", std::move(entries)}};
    if (d.total_count()) j["total_count"] = *d.total_count();
    return j;
}

void write_samples_text(const SampleSet& s, std::ostream& out) {
    for (double v : s.values) out << format_double(v) << '\n';
}

void write_samples_csv(const SampleSet& s, std::ostream& out) {
    out << "# seed=" << s.seed << " count=" << s.count << " source=" << s.source << '\n';
    out << "value\n";
    write_samples_text(s, out);
}

void save_samples(const SampleSet& s, const std::filesystem::path& path, bool csv) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write '" + path.string() + "'");
    csv ? write_samples_csv(s, out) : write_samples_text(s, out);
}

json fit_report_json(const FitReport& r) {
    return json{{"length", r.length},
                {"count", r.count},
                {"dof", r.dof},
                {"chi_square", r.chi_square},
                {"p_value", r.p_value},
                {"mad", r.mad},
                {"max_abs_dev", r.max_abs_dev},
                {"empirical", digit_distribution_json(r.empirical)},
                {"theoretical", digit_distribution_json(r.theoretical)}};
}

std::string fit_report_text(const FitReport& r) {
    std::ostringstream out;
    out << "block  empirical  theoretical  abs_dev\n";
    for (std::size_t i = 0; i < r.empirical.size(); ++i) {
        const double e = r.empirical.probabilities()[i];
        const double t = r.theoretical.probabilities()[i];
        char buf[96];
        std::snprintf(buf, sizeof buf, "%-6s %9.6f  %10.6f  %8.6f\n",
                      r.empirical.block_label(i).c_str(), e, t, std::abs(e - t));
        out << buf;
    }
    out << "count        " << r.count << '\n';
    out << "dof          " << r.dof << '\n';
    out << "chi_square   " << format_fixed(r.chi_square, 6) << '\n';
    out << "p_value      " << format_fixed(r.p_value, 6) << '\n';
    out << "mad          " << format_fixed(r.mad, 8) << '\n';
    out << "max_abs_dev  " << format_fixed(r.max_abs_dev, 8) << '\n';
    return out.str();
}

json invariance_report_json(const InvarianceReport& r) {
    json dists = json::array();
    for (const auto& d : r.distributions) dists.push_back(digit_distribution_json(d));
    return json{{"length", r.length},
                {"parameters", r.parameters},
                {"deviations", r.deviations},
                {"max_deviation", r.max_deviation},
                {"distributions", std::move(dists)}};
}

std::string invariance_report_text(const InvarianceReport& r) {
    std::ostringstream out;
    out << "scale        total_variation\n";
    for (std::size_t i = 0; i < r.parameters.size(); ++i) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%-12.6g %.12g\n", r.parameters[i], r.deviations[i]);
        out << buf;
    }
    out << "max_deviation " << format_double(r.max_deviation) << '\n';
    return out.str();
}

std::string histogram_csv(const Histogram& h) {
    std::string out;
    out += "# below=" + std::to_string(h.below) + " above=" + std::to_string(h.above) + "\n";
    out += "bin_lo,bin_hi,count\n";
    const double width = (h.hi - h.lo) / static_cast<double>(h.counts.size());
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
        const double lo = h.lo + width * static_cast<double>(i);
        const double hi = i + 1 == h.counts.size() ? h.hi : h.lo + width * static_cast<double>(i + 1);
        out += format_double(lo);
        out += ',';
        out += format_double(hi);
        out += ',';
        out += std::to_string(h.counts[i]);
        out += '\n';
    }
    return out;
}

} // namespace benford
