#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "benford/density.hpp"

namespace benford {

// A seeded draw with its provenance. Identical (seed, source, count)
// always reproduce identical values.
struct SampleSet {
    std::vector<double> values;
    std::uint64_t seed = 0;
    std::uint64_t count = 0;
    std::string source;
};

// Samples are produced in fixed-size chunks, each chunk independently
// seeded by chunk_seed(seed, index), so results do not depend on how the
// work is divided.
inline constexpr std::size_t kSampleChunk = 65536;

// Inverse-CDF draws from g: a uniform variate picks the piece by
// cumulative weight (binary search), then the piece-local CDF is inverted
// analytically per shape.
SampleSet sample_x(const PiecewiseDensity& g, std::size_t count, std::uint64_t seed,
                   std::string source = {});

// 10^x for each x drawn by sample_x: samples of Y when g is the density of
// log10(Y).
SampleSet sample_y(const PiecewiseDensity& g, std::size_t count, std::uint64_t seed,
                   std::string source = {});

} // namespace benford
