#pragma once

#include <string_view>
#include <vector>

#include "benford/density.hpp"
#include "benford/digits.hpp"

namespace benford {

// Ordered breakpoints 0 = a0 < a1 < ... < am = 1 of the unit interval.
class Partition {
public:
    explicit Partition(std::vector<double> points);

    const std::vector<double>& points() const { return points_; }
    std::size_t intervals() const { return points_.size() - 1; }

private:
    std::vector<double> points_;
};

// Unit bump densities, one per partition cell (or a single bump broadcast
// to every cell). Each bump must have raw mass 1 on [0,1] within 1e-12.
class BumpFamily {
public:
    explicit BumpFamily(std::vector<PieceShape> bumps);

    static BumpFamily broadcast(PieceShape bump);
    // "uniform" | "sine" | "linear-ramp"
    static BumpFamily named(std::string_view name);

    bool is_broadcast() const { return bumps_.size() == 1; }
    std::size_t size() const { return bumps_.size(); }
    const PieceShape& bump(std::size_t cell) const;

private:
    std::vector<PieceShape> bumps_;
};

// The digit-boundary partition for length-n blocks: a_j = log10(v_j/10^(n-1))
// over the 9*10^(n-1) consecutive n-digit mantissa values, so each cell
// width is log(1 + 1/v_j).
Partition benford_partition(int n, int max_length = kMaxBlockLength);

// Stack the bumps onto the partition: on cell [a_j, a_{j+1}) the density is
// h_j((x-a_j)/(a_{j+1}-a_j)), carrying weight a_{j+1}-a_j. With the Benford
// partition the result is an n-digit Benford mod-1 density for any bumps.
Mod1Density construct_n_digit(const Partition& partition, const BumpFamily& bumps);

struct NDigitReport {
    int n = 0;
    double max_abs_error = 0.0;
    double tolerance = 0.0;
    bool is_n_digit = false;
};

// Largest |block probability - log10(1+1/v)| over all length-n blocks.
NDigitReport verify_n_digit(const Mod1Density& g_dag, int n, double tolerance = 1e-9,
                            int max_length = kMaxBlockLength);

} // namespace benford
