#include "benford/presets.hpp"

#include <cmath>
#include <stdexcept>

#include "benford/construct.hpp"

namespace benford {

const std::vector<std::string_view>& preset_names() {
    static const std::vector<std::string_view> names{"uniform", "sine1", "geom60", "triangle"};
    return names;
}

PiecewiseDensity preset_density(std::string_view name) {
    if (name == "uniform") {
        return PiecewiseDensity{{Piece{0.0, 1.0, ConstantShape{1.0}, 1.0}}};
    }
    if (name == "sine1") {
        return construct_n_digit(benford_partition(1), BumpFamily::named("sine")).inner();
    }
    if (name == "geom60") {
        // Geometric staircase truncated at 60 steps; the renormalization
        // keeps the folded density exactly uniform for any truncation.
        constexpr int kSteps = 60;
        const double renorm = 1.0 - std::ldexp(1.0, -kSteps);
        std::vector<Piece> pieces;
        pieces.reserve(kSteps);
        for (int n = 1; n <= kSteps; ++n) {
            const double w = std::ldexp(1.0, -n) / renorm;
            pieces.push_back({static_cast<double>(n), static_cast<double>(n + 1),
                              ConstantShape{w}, w});
        }
        return PiecewiseDensity{std::move(pieces)};
    }
    if (name == "triangle") {
        // Triangle on [0,3) with apex at 3/2; peak height 2/3 for unit area.
        const double peak = 2.0 / 3.0;
        return PiecewiseDensity{{Piece{0.0, 1.5, LinearShape{0.0, peak}, 0.5},
                                 Piece{1.5, 3.0, LinearShape{peak, 0.0}, 0.5}}};
    }
    throw std::invalid_argument("unknown preset '" + std::string(name) +
                                "' (expected uniform, sine1, geom60, or triangle)");
}

} // namespace benford
