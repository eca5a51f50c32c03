#include "benford/digits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "benford/errors.hpp"

namespace benford {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Exact long double powers of ten; 10^27 is the largest with an exactly
// representable significand (5^27 < 2^63).
constexpr int kExactPow10 = 27;

long double pow10l(int e) {
    static const auto table = [] {
        std::array<long double, kExactPow10 + 1> t{};
        t[0] = 1.0L;
        for (int i = 1; i <= kExactPow10; ++i) t[i] = t[i - 1] * 10.0L;
        return t;
    }();
    return table[e];
}

// y * 10^p with at most one rounding per factor-of-10^27 chunk.
long double scale_pow10(long double y, int p) {
    while (p > kExactPow10) {
        y *= pow10l(kExactPow10);
        p -= kExactPow10;
    }
    while (p < -kExactPow10) {
        y /= pow10l(kExactPow10);
        p += kExactPow10;
    }
    return p >= 0 ? y * pow10l(p) : y / pow10l(-p);
}

} // namespace

DigitBlock::DigitBlock(std::vector<int> digits) : digits_(std::move(digits)) {
    if (digits_.empty()) throw std::invalid_argument("digit block: need at least one digit");
    if (digits_.size() > 18) throw std::invalid_argument("digit block: too many digits");
    if (digits_.front() < 1 || digits_.front() > 9)
        throw std::invalid_argument("digit block: leading digit must be 1..9");
    for (std::size_t i = 1; i < digits_.size(); ++i)
        if (digits_[i] < 0 || digits_[i] > 9)
            throw std::invalid_argument("digit block: digits must be 0..9");
    for (int d : digits_) value_ = value_ * 10 + d;
}

DigitBlock::DigitBlock(std::initializer_list<int> digits) : DigitBlock(std::vector<int>(digits)) {}

DigitBlock DigitBlock::from_value(std::int64_t v, int length) {
    if (length < 1 || length > 18) throw std::invalid_argument("digit block: bad length");
    if (v < ipow(10, length - 1) || v >= ipow(10, length))
        throw std::invalid_argument("digit block: value out of range for length");
    std::vector<int> ds(static_cast<std::size_t>(length));
    for (int i = length - 1; i >= 0; --i) {
        ds[static_cast<std::size_t>(i)] = static_cast<int>(v % 10);
        v /= 10;
    }
    return DigitBlock(std::move(ds));
}

std::string DigitBlock::str() const {
    std::string s;
    for (int d : digits_) s.push_back(static_cast<char>('0' + d));
    return s;
}

DigitDistribution::DigitDistribution(int base, int length, std::vector<double> probabilities)
    : base_(base), length_(length), probs_(std::move(probabilities)) {
    if (base_ < 2) throw std::invalid_argument("digit distribution: base must be >= 2");
    if (length_ < 1) throw std::invalid_argument("digit distribution: length must be >= 1");
    first_value_ = ipow(base_, length_ - 1);
    const auto expected = static_cast<std::size_t>((base_ - 1) * first_value_);
    if (probs_.size() != expected)
        throw std::invalid_argument("digit distribution: wrong number of entries");
}

DigitDistribution DigitDistribution::from_counts(int base, int length,
                                                 std::vector<std::uint64_t> counts) {
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    if (total == 0) throw std::invalid_argument("digit distribution: no observations");
    std::vector<double> probs(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i)
        probs[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
    DigitDistribution d(base, length, std::move(probs));
    d.counts_ = std::move(counts);
    d.total_count_ = total;
    return d;
}

DigitDistribution DigitDistribution::benford(int length, int base) {
    const std::int64_t first = ipow(base, length - 1);
    const double log_base = std::log(static_cast<double>(base));
    std::vector<double> probs(static_cast<std::size_t>((base - 1) * first));
    for (std::size_t i = 0; i < probs.size(); ++i) {
        const auto v = static_cast<double>(first + static_cast<std::int64_t>(i));
        probs[i] = std::log1p(1.0 / v) / log_base;
    }
    return DigitDistribution(base, length, std::move(probs));
}

double DigitDistribution::prob_of_value(std::int64_t v) const {
    const std::int64_t idx = v - first_value_;
    if (idx < 0 || idx >= static_cast<std::int64_t>(probs_.size()))
        throw std::out_of_range("digit distribution: block value out of range");
    return probs_[static_cast<std::size_t>(idx)];
}

double DigitDistribution::prob(const DigitBlock& block) const {
    if (base_ != 10) throw std::invalid_argument("digit blocks are decimal; use prob_of_value");
    if (block.length() != length_)
        throw std::invalid_argument("digit distribution: block length mismatch");
    return prob_of_value(block.value());
}

double DigitDistribution::sum() const {
    double s = 0.0;
    double comp = 0.0;
    for (double p : probs_) {
        const double t = s + p;
        comp += std::abs(s) >= std::abs(p) ? (s - t) + p : (p - t) + s;
        s = t;
    }
    return s + comp;
}

std::string DigitDistribution::block_label(std::size_t i) const {
    std::int64_t v = value_at(i);
    std::vector<std::int64_t> ds(static_cast<std::size_t>(length_));
    for (int j = length_ - 1; j >= 0; --j) {
        ds[static_cast<std::size_t>(j)] = v % base_;
        v /= base_;
    }
    std::string out;
    for (int j = 0; j < length_; ++j) {
        if (base_ > 10 && j > 0) out.push_back('-');
        out += std::to_string(ds[static_cast<std::size_t>(j)]);
    }
    return out;
}

double total_variation(const DigitDistribution& p, const DigitDistribution& q) {
    if (p.base() != q.base() || p.length() != q.length())
        throw std::invalid_argument("total variation: distributions are not comparable");
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        acc += std::abs(p.probabilities()[i] - q.probabilities()[i]);
    return 0.5 * acc;
}

double benford_block_prob(const DigitBlock& block) {
    return std::log1p(1.0 / static_cast<double>(block.value())) / std::numbers::ln10;
}

DigitBlock extract_digits(double y, int n) {
    if (!(y > 0.0) || !std::isfinite(y)) throw std::domain_error("extract_digits: y must be > 0");
    if (n < 1 || n > 17) throw std::invalid_argument("extract_digits: n must be in 1..17");

    const int k = static_cast<int>(std::floor(std::log10(y)));
    long double scaled = scale_pow10(static_cast<long double>(y), n - 1 - k);

    // log10 can misplace the exponent by one right at a power of ten; the
    // correction loops run at most once for finite doubles.
    const long double lo = pow10l(n - 1);
    const long double hi = pow10l(n);
    while (scaled >= hi) scaled /= 10.0L;
    while (scaled < lo) scaled *= 10.0L;

    // Truncate: a value within rounding error below a block boundary stays
    // in the lower block (left-closed convention). The one-step extended-
    // precision scaling keeps that error under half an ulp of the product.
    const auto v = static_cast<std::int64_t>(scaled);
    return DigitBlock::from_value(v, n);
}

double log_mantissa_bound(std::int64_t v, int n, int base) {
    const std::int64_t first = ipow(base, n - 1);
    if (v == first) return 0.0;
    if (v == first * base) return 1.0;
    if (base == 10) return std::log10(static_cast<double>(v)) - (n - 1);
    return std::log(static_cast<double>(v)) / std::log(static_cast<double>(base)) - (n - 1);
}

double digit_prob_from_mod1(const Mod1Density& g_dag, const DigitBlock& block) {
    const int n = block.length();
    return g_dag.integrate(log_mantissa_bound(block.value(), n),
                           log_mantissa_bound(block.value() + 1, n));
}

DigitDistribution full_digit_distribution(const Mod1Density& g_dag, int n, int max_length) {
    if (n < 1) throw std::invalid_argument("digit distribution: n must be >= 1");
    if (n > max_length)
        throw LimitError("digit distribution: block length " + std::to_string(n) +
                         " exceeds the limit of " + std::to_string(max_length));
    const std::int64_t first = ipow(10, n - 1);
    std::vector<double> probs(static_cast<std::size_t>(9 * first));
    for (std::size_t i = 0; i < probs.size(); ++i) {
        const std::int64_t v = first + static_cast<std::int64_t>(i);
        probs[i] = g_dag.integrate(log_mantissa_bound(v, n), log_mantissa_bound(v + 1, n));
    }
    return DigitDistribution(10, n, std::move(probs));
}

} // namespace benford
