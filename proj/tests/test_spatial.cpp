#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "doctest.h"
#include "v6taxon/spatial.hpp"
#include "v6taxon/synth.hpp"

using namespace v6taxon;

namespace {

std::vector<Address> sorted_unique(std::vector<Address> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<Address> random_set(std::mt19937_64& rng, int n) {
    std::vector<Address> v;
    for (int i = 0; i < n; i++)
        v.push_back({0x2000000000000000ull | (rng() >> 4), rng() >> (rng() % 64)});
    return sorted_unique(v);
}

}  // namespace

TEST_CASE("single address: every ratio is 1") {
    auto counts = aggregate_counts(sorted_unique({parse_address("2001:db8::1")}));
    for (int k : {1, 4, 8, 16}) {
        auto s = mra_ratios(counts, k);
        CHECK(s.points.size() == size_t(128 / k));
        for (const auto& pt : s.points) CHECK(pt.ratio() == 1.0);
        auto [num, den] = mra_ratio_product(s);
        CHECK(num == 1);
        CHECK(den == 1);
    }
}

TEST_CASE("worked-example pair: gamma_125 = 2, rest 1, product = N") {
    auto counts = aggregate_counts(
        sorted_unique({parse_address("2001:db8::1"), parse_address("2001:db8::4")}));
    auto s = mra_ratios(counts, 1);
    for (const auto& pt : s.points)
        CHECK(pt.ratio() == (pt.p == 125 ? 2.0 : 1.0));
    auto [num, den] = mra_ratio_product(s);
    CHECK(num == 2);
    CHECK(den == 1);
}

TEST_CASE("every /56 splitting in two gives gamma_56 = 2") {
    std::vector<Address> addrs;
    for (uint64_t i = 0; i < 100; i++) {
        uint64_t slash56 = 0x2001000000000000ull | i << 8;
        addrs.push_back({slash56, 1});               // /57 half 0
        addrs.push_back({slash56 | 0x80, 2});        // /57 half 1
    }
    auto counts = aggregate_counts(sorted_unique(addrs));
    CHECK(counts.n[56] == 100);
    CHECK(counts.n[57] == 200);
    auto s = mra_ratios(counts, 1);
    CHECK(s.points[56].ratio() == 2.0);
}

TEST_CASE("product, range, and resolution-consistency laws on random sets") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 40; trial++) {
        auto addrs = random_set(rng, 1 + int(rng() % 400));
        auto counts = aggregate_counts(addrs);
        MraRatioSeries s1 = mra_ratios(counts, 1);
        for (int k : {1, 4, 8, 16}) {
            auto s = mra_ratios(counts, k);
            auto [num, den] = mra_ratio_product(s);
            CHECK(num == addrs.size());
            CHECK(den == 1);
            for (const auto& pt : s.points) {
                CHECK(pt.ratio() >= 1.0);
                CHECK(pt.ratio() <= std::ldexp(1.0, k));
            }
        }
        // gamma_p^4 == product of the four single-bit ratios, exactly
        auto s4 = mra_ratios(counts, 4);
        for (const auto& pt : s4.points) {
            uint64_t num = pt.n_p_plus_k, den = pt.n_p;
            uint64_t n2 = 1, d2 = 1;
            for (int b = 0; b < 4; b++) {
                n2 *= s1.points[size_t(pt.p + b)].n_p_plus_k;
                d2 *= s1.points[size_t(pt.p + b)].n_p;
            }
            CHECK(num * d2 == n2 * den);
        }
    }
    CHECK_THROWS(mra_ratios(AggregateCounts{}, 1));
    CHECK_THROWS(mra_ratios(AggregateCounts{{1}}, 3));
}

TEST_CASE("population distribution examples") {
    auto addrs = sorted_unique({parse_address("2001:db8::1"), parse_address("2001:db8::2"),
                                parse_address("2001:db8:1::9")});
    auto d = population_distribution(addrs, 112);
    std::vector<uint64_t> pops = d.populations;
    std::sort(pops.begin(), pops.end());
    CHECK(pops == std::vector<uint64_t>{1, 2});
    CHECK(d.ccdf_at(1) == 1.0);
    CHECK(d.ccdf_at(2) == 0.5);
    CHECK(d.ccdf_at(3) == 0.0);

    auto all = population_distribution(addrs, 0);
    CHECK(all.populations == std::vector<uint64_t>{3});
    CHECK(all.ccdf_at(3) == 1.0);

    auto each = population_distribution(addrs, 128);
    CHECK(each.populations.size() == 3);
    for (uint64_t p : each.populations) CHECK(p == 1);
}

TEST_CASE("population distribution matches a hash-grouping oracle") {
    std::mt19937_64 rng(53);
    std::vector<Address> addrs;
    for (int i = 0; i < 10000; i++)
        addrs.push_back({0x20010db800000000ull | (rng() & 0xffff), 0x1000 + (rng() & 0xfff)});
    addrs = sorted_unique(addrs);
    auto d = population_distribution(addrs, 64);

    std::map<uint64_t, uint64_t> groups;
    for (const Address& a : addrs) groups[a.hi]++;
    std::vector<uint64_t> want;
    for (auto& [k, v] : groups) want.push_back(v);
    std::sort(want.begin(), want.end());
    std::vector<uint64_t> got = d.populations;
    std::sort(got.begin(), got.end());
    CHECK(got == want);
    for (const auto& [x, f] : d.ccdf) {
        uint64_t ge = 0;
        for (uint64_t p : want)
            if (p >= x) ge++;
        CHECK(f == double(ge) / double(want.size()));
    }
    CHECK(d.ccdf.front().second == 1.0);
    for (size_t i = 1; i < d.ccdf.size(); i++)
        CHECK(d.ccdf[i].second <= d.ccdf[i - 1].second);
}

TEST_CASE("density report: simple /124 example") {
    std::vector<DensityClass> classes{{2, 124}};
    auto addrs = sorted_unique({parse_address("2001:db8::1"), parse_address("2001:db8::2")});
    auto rows = density_report(addrs, classes);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].dense_prefix_count == 1);
    CHECK(rows[0].contained_address_count == 2);
    CHECK(rows[0].possible_addresses == "16");
    CHECK(rows[0].density == 0.125);
    CHECK(density_decimal(2, 124) == "0.1250000000");
}

TEST_CASE("density report: empty class") {
    std::vector<DensityClass> classes{{100, 124}};
    auto addrs = sorted_unique({parse_address("2001:db8::1")});
    auto rows = density_report(addrs, classes);
    CHECK(rows[0].dense_prefix_count == 0);
    CHECK(rows[0].possible_addresses == "0");
}

TEST_CASE("power-of-two decimal rendering") {
    CHECK(mul_pow2_decimal(1, 0) == "1");
    CHECK(mul_pow2_decimal(1, 16) == "65536");
    CHECK(mul_pow2_decimal(3, 4) == "48");
    CHECK(mul_pow2_decimal(1, 128) == "340282366920938463463374607431768211456");
}

TEST_CASE("privacy signature on synthetic populations") {
    SynthParams p;
    p.seed = 99;
    p.num_64s = 50;
    p.per_64 = 200;
    auto privacy = sorted_unique(synth(SynthScheme::Privacy, p));
    auto verdict = privacy_signature_check(aggregate_counts(privacy));
    CHECK(verdict.consistent);

    SynthParams e;
    e.seed = 99;
    e.count = 10000;
    auto eui = sorted_unique(synth(SynthScheme::Eui64, e));
    auto v2 = privacy_signature_check(aggregate_counts(eui));
    CHECK(!v2.consistent);
    CHECK(!v2.failures.empty());

    auto single = sorted_unique({parse_address("2001:db8::1")});
    CHECK(!privacy_signature_check(aggregate_counts(single)).consistent);
}
