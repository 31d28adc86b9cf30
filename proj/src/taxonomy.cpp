#include "v6taxon/taxonomy.hpp"

#include <cstdio>

namespace v6taxon {

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Teredo: return "teredo";
        case Kind::Sixto4: return "6to4";
        case Kind::Isatap: return "isatap";
        case Kind::Eui64: return "eui64";
        case Kind::Other: return "other";
    }
    return "?";
}

std::optional<uint64_t> extract_mac(uint64_t iid) {
    if (((iid >> 24) & 0xffff) != 0xfffe) return std::nullopt;
    uint64_t oui = (iid >> 40) ^ 0x020000;  // invert the u-bit
    uint64_t nic = iid & 0xffffff;
    return oui << 24 | nic;
}

uint64_t mac_to_eui64_iid(uint64_t mac) {
    uint64_t oui = (mac >> 24) ^ 0x020000;
    uint64_t nic = mac & 0xffffff;
    return oui << 40 | uint64_t(0xfffe) << 24 | nic;
}

int u_bit(const Address& a) {
    return a.bit(70);
}

FormatClass classify_format(const Address& a) {
    FormatClass fc;
    auto mac = extract_mac(a.iid());
    fc.eui64_layout = mac.has_value();

    if ((a.hi >> 32) == 0x20010000) {
        fc.kind = Kind::Teredo;
    } else if ((a.hi >> 48) == 0x2002) {
        fc.kind = Kind::Sixto4;
        fc.embedded_ipv4 = uint32_t(a.hi >> 16);
    } else if ((a.lo >> 32) == 0x00005efe || (a.lo >> 32) == 0x02005efe) {
        fc.kind = Kind::Isatap;
        fc.embedded_ipv4 = uint32_t(a.lo);
    } else if (mac) {
        fc.kind = Kind::Eui64;
        fc.mac = mac;
    } else {
        fc.kind = Kind::Other;
    }
    return fc;
}

std::string format_mac(uint64_t mac) {
    char buf[18];
    std::snprintf(buf, sizeof buf, "%02x:%02x:%02x:%02x:%02x:%02x",
                  unsigned(mac >> 40 & 0xff), unsigned(mac >> 32 & 0xff),
                  unsigned(mac >> 24 & 0xff), unsigned(mac >> 16 & 0xff),
                  unsigned(mac >> 8 & 0xff), unsigned(mac & 0xff));
    return buf;
}

std::string format_ipv4(uint32_t v4) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%u.%u.%u.%u", v4 >> 24, v4 >> 16 & 0xff,
                  v4 >> 8 & 0xff, v4 & 0xff);
    return buf;
}

}  // namespace v6taxon
