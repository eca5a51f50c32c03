#include "benford/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace benford {

namespace {

// Neumaier-compensated sum; piece counts can reach thousands and the
// normalization check is at 1e-12.
double compensated_sum(const std::vector<Piece>& pieces) {
    double sum = 0.0;
    double comp = 0.0;
    for (const Piece& p : pieces) {
        const double t = sum + p.weight;
        if (std::abs(sum) >= std::abs(p.weight))
            comp += (sum - t) + p.weight;
        else
            comp += (p.weight - t) + sum;
        sum = t;
    }
    return sum + comp;
}

void validate_piece(const Piece& p) {
    if (!(p.lo < p.hi) || !std::isfinite(p.lo) || !std::isfinite(p.hi))
        throw std::invalid_argument("piece: need finite lo < hi");
    if (!(p.weight >= 0.0) || !std::isfinite(p.weight))
        throw std::invalid_argument("piece: weight must be a finite nonnegative number");
    validate_shape(p.shape);
    if (p.weight > 0.0 && shape_total(p.shape) <= 0.0)
        throw std::invalid_argument("piece: positive weight on a zero-mass shape");
}

} // namespace

double Piece::height_at(double u) const {
    if (weight == 0.0) return 0.0;
    return weight * shape_value(shape, u) / (shape_total(shape) * width());
}

PiecewiseDensity::PiecewiseDensity(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw std::invalid_argument("density: no pieces");
    for (const Piece& p : pieces_) validate_piece(p);
    for (std::size_t i = 1; i < pieces_.size(); ++i)
        if (pieces_[i].lo < pieces_[i - 1].hi)
            throw std::invalid_argument("density: pieces must be sorted and disjoint");
    const double m = mass();
    if (std::abs(m - 1.0) > 1e-12)
        throw std::invalid_argument("density: total mass " + std::to_string(m) + " is not 1");
}

double PiecewiseDensity::mass() const { return compensated_sum(pieces_); }

double PiecewiseDensity::evaluate(double x) const {
    // First piece with hi > x; x belongs to it iff its lo <= x.
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                               [](double v, const Piece& p) { return v < p.hi; });
    if (it == pieces_.end() || x < it->lo) return 0.0;
    return it->height_at((x - it->lo) / it->width());
}

double PiecewiseDensity::integrate(double lo, double hi) const {
    if (!(lo <= hi)) throw std::invalid_argument("integrate: reversed bounds");
    if (lo == hi) return 0.0;
    double total = 0.0;
    for (const Piece& p : pieces_) {
        const double x1 = std::max(lo, p.lo);
        const double x2 = std::min(hi, p.hi);
        if (x1 >= x2 || p.weight == 0.0) continue;
        const double u1 = (x1 - p.lo) / p.width();
        const double u2 = (x2 - p.lo) / p.width();
        total += p.weight * (shape_fraction(p.shape, u2) - shape_fraction(p.shape, u1));
    }
    return total;
}

Mod1Density::Mod1Density(PiecewiseDensity inner) : inner_(std::move(inner)) {
    for (const Piece& p : inner_.pieces())
        if (p.lo < 0.0 || p.hi > 1.0)
            throw std::invalid_argument("mod-1 density: support must lie in [0,1)");
}

namespace {

// A piece fragment folded into [0,1).
struct Fragment {
    double lo;
    double hi;
    PieceShape shape;
    double weight;

    double height_at(double u) const {
        if (weight == 0.0) return 0.0;
        return weight * shape_value(shape, u) / (shape_total(shape) * (hi - lo));
    }
};

// Split [piece.lo, piece.hi) at the interior cuts, assigning the remainder
// weight to the last part so the parts sum to the piece weight exactly.
// Cuts that collapse onto an endpoint or a neighbour in local coordinates
// are dropped; they would carry no representable width.
template <class Emit>
void split_at(const Piece& p, const std::vector<double>& cuts, Emit&& emit) {
    std::vector<std::pair<double, double>> marks;  // (x, local u), strictly increasing
    marks.reserve(cuts.size());
    for (double c : cuts) {
        const double u = (c - p.lo) / p.width();
        if (u <= 0.0 || u >= 1.0) continue;
        if (!marks.empty() && u <= marks.back().second) continue;
        marks.push_back({c, u});
    }
    if (marks.empty()) {
        emit(p.lo, p.hi, p.shape, p.weight);
        return;
    }
    double used = 0.0;
    double prev_x = p.lo;
    double prev_u = 0.0;
    for (std::size_t i = 0; i <= marks.size(); ++i) {
        const double x = i < marks.size() ? marks[i].first : p.hi;
        const double u = i < marks.size() ? marks[i].second : 1.0;
        double w;
        if (i == marks.size()) {
            w = std::max(p.weight - used, 0.0);
        } else {
            w = p.weight == 0.0
                    ? 0.0
                    : p.weight * (shape_fraction(p.shape, u) - shape_fraction(p.shape, prev_u));
            used += w;
        }
        emit(prev_x, x, shape_restrict(p.shape, prev_u, u), w);
        prev_x = x;
        prev_u = u;
    }
}

std::vector<Fragment> fold_pieces(const std::vector<Piece>& pieces) {
    std::vector<Fragment> frags;
    for (const Piece& p : pieces) {
        std::vector<double> cuts;
        for (double k = std::floor(p.lo) + 1.0; k < p.hi; k += 1.0)
            if (k > p.lo) cuts.push_back(k);
        split_at(p, cuts, [&](double lo, double hi, PieceShape shape, double w) {
            const double base = std::floor(lo);
            frags.push_back({lo - base, std::min(hi - base, 1.0), std::move(shape), w});
        });
    }
    return frags;
}

bool is_constant(const PieceShape& s) { return std::holds_alternative<ConstantShape>(s); }
bool is_linearish(const PieceShape& s) {
    return is_constant(s) || std::holds_alternative<LinearShape>(s);
}

// Merge fragments covering one elementary interval [lo,hi) into a single
// piece. Constant and linear stacks sum in closed form; anything else is
// sampled onto the overlap grid.
Piece merge_fragments(double lo, double hi, const std::vector<Fragment>& cover, int grid) {
    double weight = 0.0;
    for (const Fragment& f : cover) weight += f.weight;
    if (cover.size() == 1) return Piece{lo, hi, cover.front().shape, weight};

    const bool all_constant = std::all_of(cover.begin(), cover.end(),
                                          [](const Fragment& f) { return is_constant(f.shape); });
    if (all_constant) {
        double level = 0.0;
        for (const Fragment& f : cover) level += f.height_at(0.0);
        return Piece{lo, hi, ConstantShape{level}, weight};
    }
    const bool all_linear = std::all_of(cover.begin(), cover.end(),
                                        [](const Fragment& f) { return is_linearish(f.shape); });
    if (all_linear) {
        double left = 0.0;
        double right = 0.0;
        for (const Fragment& f : cover) {
            left += f.height_at(0.0);
            right += f.height_at(1.0);
        }
        return Piece{lo, hi, LinearShape{left, right}, weight};
    }
    const int points = std::max(2, static_cast<int>(std::ceil((hi - lo) * grid)) + 1);
    std::vector<double> ordinates(static_cast<std::size_t>(points), 0.0);
    for (int i = 0; i < points; ++i) {
        const double u = static_cast<double>(i) / (points - 1);
        for (const Fragment& f : cover) ordinates[static_cast<std::size_t>(i)] += f.height_at(u);
    }
    return Piece{lo, hi, TabulatedShape{std::move(ordinates)}, weight};
}

} // namespace

Mod1Density mod1_project(const PiecewiseDensity& g, int overlap_grid) {
    std::vector<Fragment> frags = fold_pieces(g.pieces());

    // Cut every fragment at every fragment boundary, so fragments either
    // coincide with an elementary interval or miss it entirely.
    std::vector<double> bounds;
    bounds.reserve(frags.size() * 2);
    for (const Fragment& f : frags) {
        bounds.push_back(f.lo);
        bounds.push_back(f.hi);
    }
    std::sort(bounds.begin(), bounds.end());
    bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

    std::vector<Fragment> atoms;
    for (const Fragment& f : frags) {
        auto first = std::upper_bound(bounds.begin(), bounds.end(), f.lo);
        std::vector<double> cuts;
        for (auto it = first; it != bounds.end() && *it < f.hi; ++it) cuts.push_back(*it);
        const Piece as_piece{f.lo, f.hi, f.shape, f.weight};
        split_at(as_piece, cuts, [&](double lo, double hi, PieceShape shape, double w) {
            atoms.push_back({lo, hi, std::move(shape), w});
        });
    }

    // Every atom starts exactly on a bound; group by start and merge.
    std::stable_sort(atoms.begin(), atoms.end(),
                     [](const Fragment& a, const Fragment& b) { return a.lo < b.lo; });
    std::vector<Piece> pieces;
    std::size_t a = 0;
    for (std::size_t b = 0; b + 1 < bounds.size(); ++b) {
        std::vector<Fragment> cover;
        while (a < atoms.size() && atoms[a].lo == bounds[b]) cover.push_back(atoms[a++]);
        if (cover.empty()) continue;
        pieces.push_back(merge_fragments(bounds[b], bounds[b + 1], cover, overlap_grid));
    }
    return Mod1Density{PiecewiseDensity{std::move(pieces)}};
}

Mod1Density translate_mod1(const Mod1Density& g_dag, double t) {
    const double shift = t - std::floor(t);
    if (shift == 0.0) return g_dag;

    std::vector<Piece> out;
    for (const Piece& p : g_dag.inner().pieces()) {
        const double lo = p.lo + shift;
        const double hi = p.hi + shift;
        if (hi <= 1.0) {
            out.push_back({lo, hi, p.shape, p.weight});
        } else if (lo >= 1.0) {
            out.push_back({lo - 1.0, hi - 1.0, p.shape, p.weight});
        } else {
            // Wrap-around: the mass beyond 1 reappears at 0.
            const double uc = (1.0 - lo) / (hi - lo);
            const double w_left =
                p.weight == 0.0 ? 0.0 : p.weight * shape_fraction(p.shape, uc);
            out.push_back({lo, 1.0, shape_restrict(p.shape, 0.0, uc), w_left});
            out.push_back({0.0, hi - 1.0, shape_restrict(p.shape, uc, 1.0),
                           std::max(p.weight - w_left, 0.0)});
        }
    }
    std::sort(out.begin(), out.end(), [](const Piece& a, const Piece& b) { return a.lo < b.lo; });

    // The circle seam rounds twice ((1+t)-1 vs 0+t), so a wrapped end can
    // overshoot its neighbour by an ulp. Snap such overlaps; a piece thinned
    // away entirely donates its weight to its neighbour.
    for (std::size_t i = 1; i < out.size();) {
        if (out[i].lo < out[i - 1].hi) {
            if (out[i - 1].hi - out[i].lo > 1e-12)
                throw std::logic_error("translate_mod1: pieces overlap beyond rounding");
            out[i].lo = out[i - 1].hi;
            if (!(out[i].lo < out[i].hi)) {
                out[i - 1].weight += out[i].weight;
                out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
                continue;
            }
        }
        ++i;
    }
    return Mod1Density{PiecewiseDensity{std::move(out)}};
}

PiecewiseDensity rebase_log_density(const PiecewiseDensity& g, int base) {
    if (base < 2) throw std::invalid_argument("rebase: base must be an integer >= 2");
    const double scale = 1.0 / std::log10(static_cast<double>(base));
    std::vector<Piece> out;
    out.reserve(g.pieces().size());
    for (const Piece& p : g.pieces()) out.push_back({p.lo * scale, p.hi * scale, p.shape, p.weight});
    return PiecewiseDensity{std::move(out)};
}

PiecewiseDensity density_of_y_from_g(const PiecewiseDensity& g, int ordinates_per_piece) {
    if (ordinates_per_piece < 2)
        throw std::invalid_argument("density_of_y: need at least two ordinates per piece");
    constexpr double kLn10 = std::numbers::ln10;
    std::vector<Piece> out;
    out.reserve(g.pieces().size());
    for (const Piece& p : g.pieces()) {
        const double ylo = std::pow(10.0, p.lo);
        const double yhi = std::pow(10.0, p.hi);
        const auto m = static_cast<std::size_t>(ordinates_per_piece);
        std::vector<double> ordinates(m);
        for (std::size_t i = 0; i < m; ++i) {
            const double y = ylo + (yhi - ylo) * static_cast<double>(i) / static_cast<double>(m - 1);
            const double u = std::clamp((std::log10(y) - p.lo) / p.width(), 0.0, 1.0);
            ordinates[i] = p.height_at(u) / (y * kLn10);
        }
        out.push_back({ylo, yhi, TabulatedShape{std::move(ordinates)}, p.weight});
    }
    return PiecewiseDensity{std::move(out)};
}

} // namespace benford
