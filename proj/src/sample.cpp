#include "benford/sample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "benford/rng.hpp"

namespace benford {

namespace {

// Per-piece inversion state: cumulative weight before the piece, plus knot
// prefix masses for tabulated shapes so draws stay O(log m).
struct PieceSampler {
    const Piece* piece = nullptr;
    double cum_before = 0.0;
    std::vector<double> knot_cum;  // tabulated only: window mass up to each knot

    double invert(double p) const;
};

double PieceSampler::invert(double p) const {
    const PieceShape& s = piece->shape;
    if (knot_cum.empty()) return shape_inverse_fraction(s, p);

    // Windowed tabulated profile: binary-search the precomputed knot
    // masses, then solve the in-segment quadratic.
    const auto& sh = std::get<TabulatedShape>(s);
    const double target = p * knot_cum.back();
    auto it = std::upper_bound(knot_cum.begin(), knot_cum.end(), target);
    auto seg = static_cast<std::size_t>(std::distance(knot_cum.begin(), it));
    seg = seg > 0 ? seg - 1 : 0;
    seg = std::min(seg, knot_cum.size() - 2);

    const auto segments = static_cast<double>(knot_cum.size() - 1);
    const double t0 = sh.win_lo + (sh.win_hi - sh.win_lo) * static_cast<double>(seg) / segments;
    const double t1 = sh.win_lo + (sh.win_hi - sh.win_lo) * (static_cast<double>(seg) + 1.0) / segments;
    const double yl = shape_value(s, static_cast<double>(seg) / segments);
    const double yr = shape_value(s, (static_cast<double>(seg) + 1.0) / segments);
    const double h = t1 - t0;
    const double want = (target - knot_cum[seg]) * (sh.win_hi - sh.win_lo);  // raw canonical mass
    double frac;
    const double slope = yr - yl;
    if (std::abs(slope) <= 1e-14 * (std::abs(yl) + std::abs(yr)) || yl + yr == 0.0) {
        frac = yl > 0.0 ? want / (yl * h) : 0.0;
    } else {
        const double disc = std::max(yl * yl + 2.0 * slope * want / h, 0.0);
        frac = (-yl + std::sqrt(disc)) / slope;
    }
    frac = std::clamp(frac, 0.0, 1.0);
    return (static_cast<double>(seg) + frac) / segments;
}

std::vector<PieceSampler> build_samplers(const PiecewiseDensity& g) {
    std::vector<PieceSampler> samplers;
    samplers.reserve(g.pieces().size());
    double cum = 0.0;
    for (const Piece& p : g.pieces()) {
        PieceSampler ps;
        ps.piece = &p;
        ps.cum_before = cum;
        cum += p.weight;
        if (const auto* tab = std::get_if<TabulatedShape>(&p.shape); tab && p.weight > 0.0) {
            const std::size_t knots = tab->ordinates.size();
            // Knot masses of the windowed profile in local-coordinate units.
            ps.knot_cum.resize(knots, 0.0);
            double acc = 0.0;
            for (std::size_t i = 1; i < knots; ++i) {
                const double u0 = static_cast<double>(i - 1) / static_cast<double>(knots - 1);
                const double u1 = static_cast<double>(i) / static_cast<double>(knots - 1);
                acc += 0.5 * (shape_value(p.shape, u0) + shape_value(p.shape, u1)) * (u1 - u0);
                ps.knot_cum[i] = acc;
            }
        }
        samplers.push_back(std::move(ps));
    }
    if (std::abs(cum - 1.0) > 1e-9)
        throw std::invalid_argument("sample: density is not normalized");
    return samplers;
}

} // namespace

SampleSet sample_x(const PiecewiseDensity& g, std::size_t count, std::uint64_t seed,
                   std::string source) {
    const std::vector<PieceSampler> samplers = build_samplers(g);
    std::vector<double> cum(samplers.size());
    for (std::size_t i = 0; i < samplers.size(); ++i)
        cum[i] = samplers[i].cum_before + samplers[i].piece->weight;

    SampleSet out;
    out.values.reserve(count);
    out.seed = seed;
    out.count = count;
    out.source = std::move(source);

    for (std::size_t chunk = 0; chunk * kSampleChunk < count; ++chunk) {
        Xoshiro256pp rng(chunk_seed(seed, chunk));
        const std::size_t todo = std::min(kSampleChunk, count - chunk * kSampleChunk);
        for (std::size_t i = 0; i < todo; ++i) {
            const double u = rng.next_unit();
            auto it = std::upper_bound(cum.begin(), cum.end(), u);
            auto idx = static_cast<std::size_t>(std::distance(cum.begin(), it));
            idx = std::min(idx, samplers.size() - 1);
            const PieceSampler& ps = samplers[idx];
            const Piece& p = *ps.piece;
            const double local =
                p.weight > 0.0 ? std::clamp((u - ps.cum_before) / p.weight, 0.0, 1.0) : 0.0;
            out.values.push_back(p.lo + p.width() * ps.invert(local));
        }
    }
    return out;
}

SampleSet sample_y(const PiecewiseDensity& g, std::size_t count, std::uint64_t seed,
                   std::string source) {
    SampleSet out = sample_x(g, count, seed, std::move(source));
    for (double& v : out.values) v = std::pow(10.0, v);
    return out;
}

} // namespace benford
