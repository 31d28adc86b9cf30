#include "v6taxon/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace v6taxon {

MraRatioSeries mra_ratios(const AggregateCounts& counts, int k) {
    if (k != 1 && k != 4 && k != 8 && k != 16)
        throw std::invalid_argument("MRA resolution k must be 1, 4, 8, or 16");
    if (counts.n[0] == 0)
        throw std::invalid_argument("MRA ratios of an empty address set");
    MraRatioSeries s;
    s.k = k;
    for (int p = 0; p + k <= 128; p += k)
        s.points.push_back({p, counts.n[size_t(p)], counts.n[size_t(p + k)]});
    return s;
}

std::pair<uint64_t, uint64_t> mra_ratio_product(const MraRatioSeries& s) {
    auto gcd128 = [](unsigned __int128 a, unsigned __int128 b) {
        while (b) {
            auto t = a % b;
            a = b;
            b = t;
        }
        return a;
    };
    // The reduced running product telescopes toward n_128 / n_0, so it
    // stays within 64 bits after each reduction.
    unsigned __int128 num = 1, den = 1;
    for (const MraPoint& pt : s.points) {
        num *= pt.n_p_plus_k;
        den *= pt.n_p;
        auto g = gcd128(num, den);
        num /= g;
        den /= g;
    }
    return {uint64_t(num), uint64_t(den)};
}

PopulationDistribution population_distribution(std::span<const Address> sorted_unique,
                                               int p) {
    if (sorted_unique.empty())
        throw std::invalid_argument("population distribution of an empty address set");
    if (p < 0 || p > 128) throw std::out_of_range("aggregate length out of range");

    PopulationDistribution out;
    out.aggregate_length = p;
    size_t i = 0;
    while (i < sorted_unique.size()) {
        Address base = sorted_unique[i].masked(p);
        size_t j = i;
        while (j < sorted_unique.size() && sorted_unique[j].masked(p) == base) j++;
        out.populations.push_back(j - i);
        i = j;
    }

    std::vector<uint64_t> sorted_pops = out.populations;
    std::sort(sorted_pops.begin(), sorted_pops.end());
    double total = double(sorted_pops.size());
    auto frac_ge = [&](uint64_t x) {
        auto it = std::lower_bound(sorted_pops.begin(), sorted_pops.end(), x);
        return double(sorted_pops.end() - it) / total;
    };
    uint64_t prev = 0;
    for (uint64_t pop : sorted_pops) {
        if (pop == prev) continue;
        out.ccdf.emplace_back(pop, frac_ge(pop));
        prev = pop;
    }
    out.ccdf.emplace_back(sorted_pops.back() + 1, 0.0);
    if (out.ccdf.front().first != 1) out.ccdf.insert(out.ccdf.begin(), {1, 1.0});
    return out;
}

double PopulationDistribution::ccdf_at(uint64_t x) const {
    uint64_t ge = 0;
    for (uint64_t pop : populations)
        if (pop >= x) ge++;
    return double(ge) / double(populations.size());
}

double density_value(uint64_t count, int len) {
    // Scaling by a power of two is exact in binary floating point.
    return std::ldexp(double(count), len - 128);
}

std::string mul_pow2_decimal(uint64_t value, int exp) {
    std::string digits = std::to_string(value);
    for (int e = 0; e < exp; e++) {
        int carry = 0;
        for (int i = int(digits.size()) - 1; i >= 0; i--) {
            int d = (digits[size_t(i)] - '0') * 2 + carry;
            digits[size_t(i)] = char('0' + d % 10);
            carry = d / 10;
        }
        if (carry) digits.insert(digits.begin(), char('0' + carry));
    }
    return digits;
}

std::string density_decimal(uint64_t count, int len, int places) {
    char fmt[16], buf[64];
    std::snprintf(fmt, sizeof fmt, "%%.%df", places);
    std::snprintf(buf, sizeof buf, fmt, density_value(count, len));
    return buf;
}

std::vector<DensityReportRow> density_report(std::span<const Address> sorted_unique,
                                             std::span<const DensityClass> classes) {
    if (sorted_unique.empty())
        throw std::invalid_argument("density report of an empty address set");
    std::vector<DensityReportRow> rows;
    for (const DensityClass& cls : classes) {
        DensePrefixReport rep = dense_fixed_length(sorted_unique, cls);
        DensityReportRow row;
        row.cls = cls;
        row.dense_prefix_count = rep.entries.size();
        for (const DenseEntry& e : rep.entries) row.contained_address_count += e.count;
        row.possible_addresses = mul_pow2_decimal(row.dense_prefix_count, 128 - cls.p);
        // density = contained / (prefixes * 2^(128-p))
        row.density = row.dense_prefix_count == 0
                          ? 0.0
                          : density_value(row.contained_address_count, cls.p) /
                                double(row.dense_prefix_count);
        rows.push_back(std::move(row));
    }
    return rows;
}

PrivacySignatureVerdict privacy_signature_check(const AggregateCounts& counts,
                                                const PrivacySignatureParams& params) {
    MraRatioSeries s = mra_ratios(counts, 1);
    PrivacySignatureVerdict v;
    auto gamma = [&](int p) { return s.points[size_t(p)].ratio(); };

    for (int p = 64; p <= 69; p++) {
        if (gamma(p) < params.t_high)
            v.failures.push_back("gamma_" + std::to_string(p) + " = " +
                                 std::to_string(gamma(p)) + " below t_high");
    }
    if (gamma(70) > params.t_low)
        v.failures.push_back("gamma_70 = " + std::to_string(gamma(70)) +
                             " above t_low (no u-bit dip)");
    for (int p = params.p_flat; p <= 127; p++) {
        if (gamma(p) > params.t_flat) {
            v.failures.push_back("gamma_" + std::to_string(p) + " = " +
                                 std::to_string(gamma(p)) + " above t_flat");
            break;
        }
    }
    v.consistent = v.failures.empty();
    return v;
}

}  // namespace v6taxon
