#include "benford/construct.hpp"

#include <cmath>
#include <stdexcept>

#include "benford/errors.hpp"

namespace benford {

Partition::Partition(std::vector<double> points) : points_(std::move(points)) {
    if (points_.size() < 2) throw std::invalid_argument("partition: need at least two points");
    if (points_.front() != 0.0 || points_.back() != 1.0)
        throw std::invalid_argument("partition: endpoints must be exactly 0 and 1");
    for (std::size_t i = 1; i < points_.size(); ++i)
        if (!(points_[i] > points_[i - 1]))
            throw std::invalid_argument("partition: points must be strictly increasing");
}

BumpFamily::BumpFamily(std::vector<PieceShape> bumps) : bumps_(std::move(bumps)) {
    if (bumps_.empty()) throw std::invalid_argument("bump family: no bumps");
    for (const PieceShape& b : bumps_) {
        validate_shape(b);
        if (std::abs(shape_total(b) - 1.0) > 1e-12)
            throw std::invalid_argument("bump family: every bump must have unit mass on [0,1]");
    }
}

BumpFamily BumpFamily::broadcast(PieceShape bump) {
    return BumpFamily(std::vector<PieceShape>{std::move(bump)});
}

BumpFamily BumpFamily::named(std::string_view name) {
    if (name == "uniform") return broadcast(ConstantShape{1.0});
    if (name == "sine") return broadcast(SineBumpShape{});
    if (name == "linear-ramp") return broadcast(LinearShape{0.0, 2.0});
    throw std::invalid_argument("bump family: unknown name '" + std::string(name) +
                                "' (expected uniform, sine, or linear-ramp)");
}

const PieceShape& BumpFamily::bump(std::size_t cell) const {
    return is_broadcast() ? bumps_.front() : bumps_.at(cell);
}

Partition benford_partition(int n, int max_length) {
    if (n < 1) throw std::invalid_argument("benford_partition: n must be >= 1");
    if (n > max_length)
        throw LimitError("benford_partition: block length " + std::to_string(n) +
                         " exceeds the limit of " + std::to_string(max_length));
    std::int64_t first = 1;
    for (int i = 1; i < n; ++i) first *= 10;
    std::vector<double> points;
    points.reserve(static_cast<std::size_t>(9 * first) + 1);
    for (std::int64_t v = first; v <= 10 * first; ++v)
        points.push_back(log_mantissa_bound(v, n));
    return Partition(std::move(points));
}

Mod1Density construct_n_digit(const Partition& partition, const BumpFamily& bumps) {
    if (!bumps.is_broadcast() && bumps.size() != partition.intervals())
        throw std::invalid_argument("construct: bump count " + std::to_string(bumps.size()) +
                                    " does not match " + std::to_string(partition.intervals()) +
                                    " partition cells");
    const auto& a = partition.points();
    std::vector<Piece> pieces;
    pieces.reserve(partition.intervals());
    for (std::size_t j = 0; j + 1 < a.size(); ++j)
        pieces.push_back({a[j], a[j + 1], bumps.bump(j), a[j + 1] - a[j]});
    return Mod1Density{PiecewiseDensity{std::move(pieces)}};
}

NDigitReport verify_n_digit(const Mod1Density& g_dag, int n, double tolerance, int max_length) {
    if (n < 1) throw std::invalid_argument("verify_n_digit: n must be >= 1");
    if (n > max_length)
        throw LimitError("verify_n_digit: block length " + std::to_string(n) +
                         " exceeds the limit of " + std::to_string(max_length));
    std::int64_t first = 1;
    for (int i = 1; i < n; ++i) first *= 10;
    double max_err = 0.0;
    for (std::int64_t v = first; v < 10 * first; ++v) {
        const DigitBlock block = DigitBlock::from_value(v, n);
        const double err = std::abs(digit_prob_from_mod1(g_dag, block) - benford_block_prob(block));
        max_err = std::max(max_err, err);
    }
    return NDigitReport{n, max_err, tolerance, max_err <= tolerance};
}

} // namespace benford
