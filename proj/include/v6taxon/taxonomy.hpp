#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "v6taxon/address.hpp"

namespace v6taxon {

enum class Kind : uint8_t { Teredo, Sixto4, Isatap, Eui64, Other };
inline constexpr int kKindCount = 5;

const char* kind_name(Kind k);

struct FormatClass {
    Kind kind = Kind::Other;
    std::optional<uint32_t> embedded_ipv4;
    std::optional<uint64_t> mac;  // low 48 bits
    // True whenever the IID has the ff:fe EUI-64 layout, even when a
    // transition-mechanism kind takes precedence (Table-1 style "!6to4"
    // tallies need it).
    bool eui64_layout = false;
};

// Precedence: Teredo, 6to4, ISATAP, EUI-64, Other.
FormatClass classify_format(const Address& a);

// IID bytes 3-4 must be ff:fe; returns the 48-bit MAC with the u-bit
// (bit 6 of the first IID byte) inverted back.
std::optional<uint64_t> extract_mac(uint64_t iid);

// Inverse of extract_mac: expands a MAC into an EUI-64 IID.
uint64_t mac_to_eui64_iid(uint64_t mac);

// Universal/local bit: address bit 70.
int u_bit(const Address& a);

std::string format_mac(uint64_t mac);
std::string format_ipv4(uint32_t v4);

}  // namespace v6taxon
