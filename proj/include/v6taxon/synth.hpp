#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "v6taxon/address.hpp"

namespace v6taxon {

enum class SynthScheme { Privacy, Eui64, SequentialPool, Dynamic64Pool };

struct SynthParams {
    uint64_t seed = 1;
    // privacy: num_64s x per_64 pseudorandom IIDs with the u-bit forced 0.
    uint64_t num_64s = 1;
    uint64_t per_64 = 1;
    // eui64: count random MACs, one address each; sequential-pool: count
    // consecutive addresses from base; dynamic-64-pool: count fixed IIDs
    // whose /64 is re-drawn per day from a pool of pool_size /64s.
    uint64_t count = 1;
    uint64_t pool_size = 16;
    int day = 0;
    Prefix base{Address{0x20010db800000000ull, 0}, 32};  // /64s are drawn inside this
};

// Deterministic in (scheme, params): same inputs, same addresses.
std::vector<Address> synth(SynthScheme scheme, const SynthParams& params);

// One compressed address per line.
void synth_lines(std::ostream& out, SynthScheme scheme, const SynthParams& params);

// EUI-64 SLAAC address for a MAC under a /64; inverse of extract_mac
// on the IID.
Address eui64_address(const Prefix& slash64, uint64_t mac);

}  // namespace v6taxon
