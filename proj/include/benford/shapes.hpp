#pragma once

#include <variant>
#include <vector>

namespace benford {

// Unit-interval profiles for density pieces. A shape describes the curve on
// the local coordinate u in [0,1]; the owning piece maps u affinely onto its
// interval and scales the curve so its mass equals the piece weight. Only
// the curve's form matters, not its absolute scale.

struct ConstantShape {
    double level = 1.0;
};

struct LinearShape {
    double left = 0.0;   // profile value at u = 0
    double right = 1.0;  // profile value at u = 1
};

// The normalized arch (pi/2)*sin(pi*t). [win_lo, win_hi] selects a
// sub-window of the arch; splitting a piece restricts the window instead of
// resampling, so wrap-around and projection stay exact.
struct SineBumpShape {
    double win_lo = 0.0;
    double win_hi = 1.0;
};

// Piecewise-linear profile through equally spaced ordinates (>= 2), with
// the same sub-window mechanism as SineBumpShape.
struct TabulatedShape {
    std::vector<double> ordinates;
    double win_lo = 0.0;
    double win_hi = 1.0;
};

using PieceShape = std::variant<ConstantShape, LinearShape, SineBumpShape, TabulatedShape>;

// Profile value at local u in [0,1] (clamped at the ends).
double shape_value(const PieceShape& s, double u);

// Raw integral of the profile over the local interval [0,u] / [0,1].
double shape_cum(const PieceShape& s, double u);
double shape_total(const PieceShape& s);

// Fraction of the shape's mass left of u: shape_cum(u)/shape_total().
// Requires shape_total() > 0.
double shape_fraction(const PieceShape& s, double u);

// Inverse of shape_fraction; p in [0,1].
double shape_inverse_fraction(const PieceShape& s, double p);

// The shape restricted to local [from,to], renormalized onto [0,1].
// Constant/Linear restrict by parameter adjustment; the windowed shapes
// narrow their window. Exact for every kind.
PieceShape shape_restrict(const PieceShape& s, double from, double to);

// Throws std::invalid_argument on negative ordinates, bad windows, or a
// tabulated shape with fewer than two ordinates.
void validate_shape(const PieceShape& s);

const char* shape_kind_name(const PieceShape& s);

} // namespace benford
