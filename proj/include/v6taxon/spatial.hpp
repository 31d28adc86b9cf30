#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "v6taxon/trie.hpp"

namespace v6taxon {

struct MraPoint {
    int p = 0;
    uint64_t n_p = 0;
    uint64_t n_p_plus_k = 0;

    double ratio() const { return double(n_p_plus_k) / double(n_p); }
};

struct MraRatioSeries {
    int k = 1;
    std::vector<MraPoint> points;  // p = 0, k, ..., 128-k
};

// k must be one of 1, 4, 8, 16.
MraRatioSeries mra_ratios(const AggregateCounts& counts, int k);

// Exact rational product of the series' ratios; telescopes to
// n_128 / n_0, so it must equal the distinct address count.
// Returns {numerator, denominator} fully reduced.
std::pair<uint64_t, uint64_t> mra_ratio_product(const MraRatioSeries& s);

struct PopulationDistribution {
    int aggregate_length = 0;
    std::vector<uint64_t> populations;  // one per active prefix, unordered
    // Step-function breakpoints: every distinct population plus the first x
    // where the fraction reaches 0.
    std::vector<std::pair<uint64_t, double>> ccdf;

    // Fraction of active prefixes with population >= x.
    double ccdf_at(uint64_t x) const;
};

PopulationDistribution population_distribution(std::span<const Address> sorted_unique,
                                               int p);

// Exact value count / 2^(128 - len) rendered without precision loss in the
// power-of-two scaling.
double density_value(uint64_t count, int len);
// Decimal rendering of value * 2^exp for Table-style big counts.
std::string mul_pow2_decimal(uint64_t value, int exp);
std::string density_decimal(uint64_t count, int len, int places = 10);

struct DensityReportRow {
    DensityClass cls;
    uint64_t dense_prefix_count = 0;
    uint64_t contained_address_count = 0;
    std::string possible_addresses;  // dense_prefix_count * 2^(128-p), decimal
    double density = 0.0;            // contained / possible
};

std::vector<DensityReportRow> density_report(std::span<const Address> sorted_unique,
                                             std::span<const DensityClass> classes);

struct PrivacySignatureParams {
    double t_high = 1.8;   // gamma_p for p in 64..69 must reach this
    double t_low = 1.1;    // gamma_70 must not exceed this (the u-bit dip)
    double t_flat = 1.05;  // gamma_p for p >= p_flat must not exceed this
    int p_flat = 96;
};

struct PrivacySignatureVerdict {
    bool consistent = false;
    std::vector<std::string> failures;
};

// Checks the single-bit MRA ratio curve for the privacy-extension shape:
// near 2 through bits 64..69, a dip at 70, flat near 1 in the tail.
PrivacySignatureVerdict privacy_signature_check(
    const AggregateCounts& counts, const PrivacySignatureParams& params = {});

}  // namespace v6taxon
