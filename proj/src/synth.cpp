#include "v6taxon/synth.hpp"

#include <random>
#include <stdexcept>

#include "v6taxon/taxonomy.hpp"

namespace v6taxon {

namespace {

// Random bits below the base prefix length, down to bit 63.
uint64_t draw_subnet_hi(std::mt19937_64& rng, const Prefix& base) {
    if (base.length > 64)
        throw std::invalid_argument("synth base prefix must be /64 or shorter");
    uint64_t mask = base.length == 64 ? 0 : (~uint64_t(0) >> base.length);
    return base.base.hi | (rng() & mask);
}

constexpr uint64_t kUBitLoMask = uint64_t(1) << 57;  // address bit 70

}  // namespace

Address eui64_address(const Prefix& slash64, uint64_t mac) {
    return Address{slash64.base.hi, mac_to_eui64_iid(mac)};
}

std::vector<Address> synth(SynthScheme scheme, const SynthParams& p) {
    std::mt19937_64 rng(p.seed);
    std::vector<Address> out;

    switch (scheme) {
        case SynthScheme::Privacy: {
            out.reserve(p.num_64s * p.per_64);
            for (uint64_t i = 0; i < p.num_64s; i++) {
                uint64_t hi = draw_subnet_hi(rng, p.base);
                for (uint64_t j = 0; j < p.per_64; j++)
                    out.push_back(Address{hi, rng() & ~kUBitLoMask});
            }
            break;
        }
        case SynthScheme::Eui64: {
            out.reserve(p.count);
            for (uint64_t i = 0; i < p.count; i++) {
                uint64_t hi = draw_subnet_hi(rng, p.base);
                uint64_t mac = rng() & 0xffffffffffffull;
                out.push_back(Address{hi, mac_to_eui64_iid(mac)});
            }
            break;
        }
        case SynthScheme::SequentialPool: {
            out.reserve(p.count);
            Address a = p.base.base;
            for (uint64_t i = 0; i < p.count; i++) {
                out.push_back(a);
                if (++a.lo == 0) a.hi++;
            }
            break;
        }
        case SynthScheme::Dynamic64Pool: {
            // A fixed IID population; the containing /64 is re-drawn per day.
            std::vector<uint64_t> pool;
            pool.reserve(p.pool_size);
            for (uint64_t i = 0; i < p.pool_size; i++)
                pool.push_back(draw_subnet_hi(rng, p.base));
            std::vector<uint64_t> iids;
            iids.reserve(p.count);
            for (uint64_t i = 0; i < p.count; i++)
                iids.push_back(rng() & ~kUBitLoMask);

            std::mt19937_64 day_rng(p.seed ^ (uint64_t(uint32_t(p.day)) * 0x9e3779b97f4a7c15ull));
            out.reserve(p.count);
            for (uint64_t iid : iids)
                out.push_back(Address{pool[day_rng() % pool.size()], iid});
            break;
        }
        default:
            throw std::invalid_argument("unknown synth scheme");
    }
    return out;
}

void synth_lines(std::ostream& out, SynthScheme scheme, const SynthParams& params) {
    for (const Address& a : synth(scheme, params)) out << format_address(a) << '\n';
}

}  // namespace v6taxon
