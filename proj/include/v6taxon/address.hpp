#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace v6taxon {

// 128-bit IPv6 address. Bit 0 is the most significant bit of hi.
struct Address {
    uint64_t hi = 0;
    uint64_t lo = 0;

    auto operator<=>(const Address&) const = default;

    bool bit(int i) const {
        return i < 64 ? (hi >> (63 - i)) & 1u : (lo >> (127 - i)) & 1u;
    }
    uint8_t byte(int i) const {
        return i < 8 ? uint8_t(hi >> (56 - 8 * i)) : uint8_t(lo >> (120 - 8 * i));
    }
    uint16_t group(int i) const {
        return i < 4 ? uint16_t(hi >> (48 - 16 * i)) : uint16_t(lo >> (112 - 16 * i));
    }
    uint64_t iid() const { return lo; }

    // Clears all bits at positions >= len.
    Address masked(int len) const {
        Address r = *this;
        if (len <= 0) {
            r.hi = r.lo = 0;
        } else if (len <= 64) {
            if (len < 64) r.hi &= ~uint64_t(0) << (64 - len);
            r.lo = 0;
        } else if (len < 128) {
            r.lo &= ~uint64_t(0) << (128 - len);
        }
        return r;
    }

    std::array<uint8_t, 16> bytes() const {
        std::array<uint8_t, 16> b;
        for (int i = 0; i < 16; i++) b[size_t(i)] = byte(i);
        return b;
    }
    static Address from_bytes(const uint8_t* b) {
        Address a;
        for (int i = 0; i < 8; i++) a.hi = (a.hi << 8) | b[i];
        for (int i = 8; i < 16; i++) a.lo = (a.lo << 8) | b[i];
        return a;
    }
};

// Length of the common leading bit run, 0..128.
int common_prefix_len(const Address& a, const Address& b);

// Address plus mask length; base is always stored masked.
struct Prefix {
    Address base;
    uint8_t length = 0;

    auto operator<=>(const Prefix&) const = default;
};

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Accepts full, ::-compressed, and dotted-quad-tail presentation forms.
// Zone indexes ("%eth0") are rejected.
std::optional<Address> try_parse_address(std::string_view text);
Address parse_address(std::string_view text);  // throws parse_error

// Canonical lowercase compressed form (longest zero run compressed,
// leftmost on tie).
std::string format_address(const Address& a);
// 32 lowercase hex chars, most-significant nybble first, no colons.
std::string format_address_fixed(const Address& a);

Prefix prefix_of(const Address& a, int length);  // throws on length out of range
bool contains(const Prefix& p, const Address& a);
std::string format_prefix(const Prefix& p);
std::optional<Prefix> try_parse_prefix(std::string_view text);

}  // namespace v6taxon
