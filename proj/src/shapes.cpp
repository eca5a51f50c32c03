#include "benford/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace benford {

namespace {

constexpr double kPi = std::numbers::pi;

double clamp01(double u) { return std::clamp(u, 0.0, 1.0); }

// Canonical arch and its antiderivative: s(t) = (pi/2) sin(pi t),
// S(t) = (1 - cos(pi t))/2, S(1) = 1.
double arch_value(double t) { return 0.5 * kPi * std::sin(kPi * t); }
double arch_cum(double t) { return 0.5 * (1.0 - std::cos(kPi * t)); }

// Piecewise-linear interpolation of equally spaced ordinates at canonical t.
double table_value(const std::vector<double>& ys, double t) {
    const auto segments = static_cast<double>(ys.size() - 1);
    const double pos = clamp01(t) * segments;
    auto i = static_cast<std::size_t>(pos);
    if (i >= ys.size() - 1) return ys.back();
    const double frac = pos - static_cast<double>(i);
    return ys[i] + (ys[i + 1] - ys[i]) * frac;
}

// Integral of the interpolant over [0,t].
double table_cum(const std::vector<double>& ys, double t) {
    const auto segments = static_cast<double>(ys.size() - 1);
    const double h = 1.0 / segments;
    const double pos = clamp01(t) * segments;
    auto full = static_cast<std::size_t>(pos);
    full = std::min(full, ys.size() - 1);
    double acc = 0.0;
    for (std::size_t i = 0; i < full; ++i) acc += 0.5 * (ys[i] + ys[i + 1]) * h;
    if (full < ys.size() - 1) {
        const double frac = pos - static_cast<double>(full);
        const double yl = ys[full];
        const double yr = ys[full] + (ys[full + 1] - ys[full]) * frac;
        acc += 0.5 * (yl + yr) * frac * h;
    }
    return acc;
}

// Local window coordinate -> canonical coordinate.
template <class Windowed>
double to_canonical(const Windowed& s, double u) {
    return s.win_lo + (s.win_hi - s.win_lo) * clamp01(u);
}

} // namespace

double shape_value(const PieceShape& s, double u) {
    return std::visit(
        [&](const auto& sh) -> double {
            using T = std::decay_t<decltype(sh)>;
            if constexpr (std::is_same_v<T, ConstantShape>) {
                return sh.level;
            } else if constexpr (std::is_same_v<T, LinearShape>) {
                return sh.left + (sh.right - sh.left) * clamp01(u);
            } else if constexpr (std::is_same_v<T, SineBumpShape>) {
                return arch_value(to_canonical(sh, u));
            } else {
                return table_value(sh.ordinates, to_canonical(sh, u));
            }
        },
        s);
}

double shape_cum(const PieceShape& s, double u) {
    const double uc = clamp01(u);
    return std::visit(
        [&](const auto& sh) -> double {
            using T = std::decay_t<decltype(sh)>;
            if constexpr (std::is_same_v<T, ConstantShape>) {
                return sh.level * uc;
            } else if constexpr (std::is_same_v<T, LinearShape>) {
                return sh.left * uc + 0.5 * (sh.right - sh.left) * uc * uc;
            } else if constexpr (std::is_same_v<T, SineBumpShape>) {
                const double dw = sh.win_hi - sh.win_lo;
                return (arch_cum(sh.win_lo + dw * uc) - arch_cum(sh.win_lo)) / dw;
            } else {
                const double dw = sh.win_hi - sh.win_lo;
                return (table_cum(sh.ordinates, sh.win_lo + dw * uc) -
                        table_cum(sh.ordinates, sh.win_lo)) /
                       dw;
            }
        },
        s);
}

double shape_total(const PieceShape& s) { return shape_cum(s, 1.0); }

double shape_fraction(const PieceShape& s, double u) {
    const double total = shape_total(s);
    if (total <= 0.0) throw std::invalid_argument("shape has no mass to apportion");
    return shape_cum(s, u) / total;
}

double shape_inverse_fraction(const PieceShape& s, double p) {
    const double pc = clamp01(p);
    const double total = shape_total(s);
    if (total <= 0.0) throw std::invalid_argument("shape has no mass to invert");
    return std::visit(
        [&](const auto& sh) -> double {
            using T = std::decay_t<decltype(sh)>;
            if constexpr (std::is_same_v<T, ConstantShape>) {
                return pc;
            } else if constexpr (std::is_same_v<T, LinearShape>) {
                // Solve l*u + (r-l)/2 u^2 = pc * (l+r)/2 for u in [0,1].
                const double l = sh.left;
                const double r = sh.right;
                const double target = pc * 0.5 * (l + r);
                const double a = 0.5 * (r - l);
                if (std::abs(a) <= 1e-14 * (std::abs(l) + std::abs(r))) {
                    return l > 0.0 ? target / l : pc;
                }
                const double disc = std::max(l * l + 4.0 * a * target, 0.0);
                const double root = (-l + std::sqrt(disc)) / (2.0 * a);
                return clamp01(root);
            } else if constexpr (std::is_same_v<T, SineBumpShape>) {
                const double c0 = arch_cum(sh.win_lo);
                const double c1 = arch_cum(sh.win_hi);
                const double target = c0 + pc * (c1 - c0);
                // arch_cum(t) = target  <=>  cos(pi t) = 1 - 2*target
                const double t = std::acos(std::clamp(1.0 - 2.0 * target, -1.0, 1.0)) / kPi;
                return clamp01((t - sh.win_lo) / (sh.win_hi - sh.win_lo));
            } else {
                const auto& ys = sh.ordinates;
                const double c0 = table_cum(ys, sh.win_lo);
                const double c1 = table_cum(ys, sh.win_hi);
                const double target = c0 + pc * (c1 - c0);
                // Locate the knot segment, then solve the in-segment
                // quadratic (density is linear there).
                const auto segments = ys.size() - 1;
                const double h = 1.0 / static_cast<double>(segments);
                double acc = 0.0;
                std::size_t seg = 0;
                double base = 0.0;
                for (; seg < segments; ++seg) {
                    const double next = acc + 0.5 * (ys[seg] + ys[seg + 1]) * h;
                    if (next >= target || seg + 1 == segments) {
                        base = acc;
                        break;
                    }
                    acc = next;
                }
                const double yl = ys[seg];
                const double yr = ys[seg + 1];
                const double want = target - base;  // mass inside the segment
                double frac;                        // in [0,1] across the segment
                const double slope = yr - yl;
                if (std::abs(slope) <= 1e-14 * (std::abs(yl) + std::abs(yr)) || yl + yr == 0.0) {
                    frac = yl > 0.0 ? want / (yl * h) : 0.0;
                } else {
                    // want = h*(yl*frac + slope/2 * frac^2)
                    const double disc = std::max(yl * yl + 2.0 * slope * want / h, 0.0);
                    frac = (-yl + std::sqrt(disc)) / slope;
                }
                frac = clamp01(frac);
                const double t = (static_cast<double>(seg) + frac) * h;
                return clamp01((t - sh.win_lo) / (sh.win_hi - sh.win_lo));
            }
        },
        s);
}

PieceShape shape_restrict(const PieceShape& s, double from, double to) {
    if (!(from >= 0.0 && from < to && to <= 1.0))
        throw std::invalid_argument("shape_restrict: bad sub-interval");
    if (from == 0.0 && to == 1.0) return s;
    return std::visit(
        [&](const auto& sh) -> PieceShape {
            using T = std::decay_t<decltype(sh)>;
            if constexpr (std::is_same_v<T, ConstantShape>) {
                return sh;
            } else if constexpr (std::is_same_v<T, LinearShape>) {
                return LinearShape{shape_value(s, from), shape_value(s, to)};
            } else if constexpr (std::is_same_v<T, SineBumpShape>) {
                const double dw = sh.win_hi - sh.win_lo;
                return SineBumpShape{sh.win_lo + dw * from, sh.win_lo + dw * to};
            } else {
                const double dw = sh.win_hi - sh.win_lo;
                return TabulatedShape{sh.ordinates, sh.win_lo + dw * from, sh.win_lo + dw * to};
            }
        },
        s);
}

void validate_shape(const PieceShape& s) {
    std::visit(
        [](const auto& sh) {
            using T = std::decay_t<decltype(sh)>;
            if constexpr (std::is_same_v<T, ConstantShape>) {
                if (!(sh.level >= 0.0) || !std::isfinite(sh.level))
                    throw std::invalid_argument("constant shape: level must be >= 0");
            } else if constexpr (std::is_same_v<T, LinearShape>) {
                if (!(sh.left >= 0.0 && sh.right >= 0.0) || !std::isfinite(sh.left) ||
                    !std::isfinite(sh.right))
                    throw std::invalid_argument("linear shape: endpoint values must be >= 0");
            } else if constexpr (std::is_same_v<T, SineBumpShape>) {
                if (!(sh.win_lo >= 0.0 && sh.win_lo < sh.win_hi && sh.win_hi <= 1.0))
                    throw std::invalid_argument("sine_bump shape: bad window");
            } else {
                if (sh.ordinates.size() < 2)
                    throw std::invalid_argument("tabulated shape: need at least two ordinates");
                for (double y : sh.ordinates)
                    if (!(y >= 0.0) || !std::isfinite(y))
                        throw std::invalid_argument("tabulated shape: ordinates must be >= 0");
                if (!(sh.win_lo >= 0.0 && sh.win_lo < sh.win_hi && sh.win_hi <= 1.0))
                    throw std::invalid_argument("tabulated shape: bad window");
            }
        },
        s);
}

const char* shape_kind_name(const PieceShape& s) {
    switch (s.index()) {
        case 0: return "constant";
        case 1: return "linear";
        case 2: return "sine_bump";
        default: return "tabulated";
    }
}

} // namespace benford
