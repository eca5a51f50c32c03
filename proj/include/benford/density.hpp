#pragma once

#include <vector>

#include "benford/shapes.hpp"

namespace benford {

// One analytic piece of a density: the shape rescaled onto [lo,hi) and
// normalized so the piece's mass is exactly `weight`.
struct Piece {
    double lo = 0.0;
    double hi = 1.0;
    PieceShape shape = ConstantShape{};
    double weight = 1.0;

    double width() const { return hi - lo; }
    // Density height at local u in [0,1]; u = 1 gives the left limit at hi.
    double height_at(double u) const;
};

// A probability density on the real line as a finite ordered list of
// disjoint pieces. Immutable after construction; total mass must be 1
// within 1e-12. Intervals are left-closed right-open.
class PiecewiseDensity {
public:
    explicit PiecewiseDensity(std::vector<Piece> pieces);

    const std::vector<Piece>& pieces() const { return pieces_; }
    double support_lo() const { return pieces_.front().lo; }
    double support_hi() const { return pieces_.back().hi; }

    // Compensated sum of piece weights.
    double mass() const;

    // 0 outside every piece; right-continuous at boundaries.
    double evaluate(double x) const;

    // Exact closed-form integral over [lo,hi). Throws on reversed bounds.
    double integrate(double lo, double hi) const;

private:
    std::vector<Piece> pieces_;
};

// A density supported on [0,1): the mod-1 projection target.
class Mod1Density {
public:
    explicit Mod1Density(PiecewiseDensity inner);

    const PiecewiseDensity& inner() const { return inner_; }
    double evaluate(double x) const { return inner_.evaluate(x); }
    double integrate(double lo, double hi) const { return inner_.integrate(lo, hi); }

private:
    PiecewiseDensity inner_;
};

// Grid resolution (points per unit length) used when overlapping fragments
// cannot be summed in closed form and degrade to a tabulated profile.
inline constexpr int kOverlapGrid = 4096;

// Sum of g(x+k) over all integers k, folded onto [0,1). Pieces are split at
// integer boundaries and translated; overlapping fragments are combined --
// constant/linear stacks exactly, anything else on a tabulated grid. Mass
// is carried by piece-weight bookkeeping, not quadrature.
Mod1Density mod1_project(const PiecewiseDensity& g, int overlap_grid = kOverlapGrid);

// The mod-1 projection of x -> g(x - t): shift by t mod 1 with wrap-around.
// Exact for every shape kind; t = 0 mod 1 returns the input unchanged.
Mod1Density translate_mod1(const Mod1Density& g_dag, double t);

// Given g = density of log10(Y), the density of log_b(Y): intervals scaled
// by 1/log10(b), heights by log10(b), weights unchanged. Throws on b < 2.
PiecewiseDensity rebase_log_density(const PiecewiseDensity& g, int base);

// Density of Y = 10^X from the density g of X, as tabulated pieces on the
// exponentiated breakpoints: f(y) = g(log10 y) / (y ln 10).
PiecewiseDensity density_of_y_from_g(const PiecewiseDensity& g, int ordinates_per_piece = 1024);

} // namespace benford
