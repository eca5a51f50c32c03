#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "benford/density.hpp"

namespace benford {

// A prescribed leading-digit sequence d1..dn in base 10: d1 in 1..9,
// later digits in 0..9.
class DigitBlock {
public:
    explicit DigitBlock(std::vector<int> digits);
    DigitBlock(std::initializer_list<int> digits);

    // The block whose digits spell v; v must lie in [10^(length-1), 10^length).
    static DigitBlock from_value(std::int64_t v, int length);

    int length() const { return static_cast<int>(digits_.size()); }
    const std::vector<int>& digits() const { return digits_; }
    std::int64_t value() const { return value_; }
    std::string str() const;

    bool operator==(const DigitBlock&) const = default;

private:
    std::vector<int> digits_;
    std::int64_t value_ = 0;
};

// Probabilities or frequencies over all digit blocks of one length in one
// base, stored in lexicographic (= numeric) block order. Empirical
// distributions carry their counts.
class DigitDistribution {
public:
    DigitDistribution(int base, int length, std::vector<double> probabilities);

    static DigitDistribution from_counts(int base, int length,
                                         std::vector<std::uint64_t> counts);
    // log_b(1 + 1/v) for every length-n block value v.
    static DigitDistribution benford(int length, int base = 10);

    int base() const { return base_; }
    int length() const { return length_; }
    std::size_t size() const { return probs_.size(); }
    std::int64_t first_value() const { return first_value_; }
    std::int64_t value_at(std::size_t i) const { return first_value_ + static_cast<std::int64_t>(i); }

    const std::vector<double>& probabilities() const { return probs_; }
    double prob_of_value(std::int64_t v) const;
    double prob(const DigitBlock& block) const;

    const std::optional<std::vector<std::uint64_t>>& counts() const { return counts_; }
    std::optional<std::uint64_t> total_count() const { return total_count_; }

    double sum() const;
    // Digits of value_at(i); multi-character digits (base > 10) joined by '-'.
    std::string block_label(std::size_t i) const;

private:
    int base_;
    int length_;
    std::int64_t first_value_;
    std::vector<double> probs_;
    std::optional<std::vector<std::uint64_t>> counts_;
    std::optional<std::uint64_t> total_count_;
};

// 1/2 * sum |p_i - q_i|; distributions must share base and length.
double total_variation(const DigitDistribution& p, const DigitDistribution& q);

// log10(1 + 1/v) for the block value v.
double benford_block_prob(const DigitBlock& block);

// First n significant decimal digits of y > 0. y is scaled into
// [10^(n-1), 10^n) in extended precision (exponent from floor(log10),
// corrected at the edges) and truncated: values within rounding error of a
// digit boundary resolve to the lower block (left-closed convention).
DigitBlock extract_digits(double y, int n);

// Probability of the block under the mod-1 log density: the integral of
// g_dag between the logs of the block's mantissa bounds.
double digit_prob_from_mod1(const Mod1Density& g_dag, const DigitBlock& block);

inline constexpr int kMaxBlockLength = 4;

// Distribution over all length-n blocks. Throws LimitError for n beyond
// max_length (9*10^(n-1) blocks get large quickly).
DigitDistribution full_digit_distribution(const Mod1Density& g_dag, int n,
                                          int max_length = kMaxBlockLength);

// log_base(v / base^(n-1)), the mantissa-log bound shared by digit
// integrals and the Benford partition; exactly 0 and 1 at the ends.
double log_mantissa_bound(std::int64_t v, int n, int base = 10);

} // namespace benford
