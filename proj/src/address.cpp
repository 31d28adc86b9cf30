#include "v6taxon/address.hpp"

#include <bit>
#include <charconv>
#include <cstdio>
#include <vector>

namespace v6taxon {

int common_prefix_len(const Address& a, const Address& b) {
    uint64_t xh = a.hi ^ b.hi;
    if (xh) return std::countl_zero(xh);
    uint64_t xl = a.lo ^ b.lo;
    if (xl) return 64 + std::countl_zero(xl);
    return 128;
}

namespace {

bool is_hex(char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

// Parses a 1-4 digit hex group.
std::optional<uint16_t> parse_group(std::string_view tok) {
    if (tok.empty() || tok.size() > 4) return std::nullopt;
    uint16_t v = 0;
    for (char c : tok) {
        if (!is_hex(c)) return std::nullopt;
        int d = (c <= '9') ? c - '0' : (c | 0x20) - 'a' + 10;
        v = uint16_t(v << 4 | d);
    }
    return v;
}

// "a.b.c.d" -> two 16-bit groups.
std::optional<std::pair<uint16_t, uint16_t>> parse_quad(std::string_view tok) {
    unsigned parts[4];
    int n = 0;
    size_t pos = 0;
    while (pos <= tok.size()) {
        size_t dot = tok.find('.', pos);
        std::string_view piece = tok.substr(pos, dot == tok.npos ? tok.npos : dot - pos);
        if (n == 4 || piece.empty() || piece.size() > 3) return std::nullopt;
        unsigned v = 0;
        for (char c : piece) {
            if (c < '0' || c > '9') return std::nullopt;
            v = v * 10 + unsigned(c - '0');
        }
        if (v > 255 || (piece.size() > 1 && piece[0] == '0')) return std::nullopt;
        parts[n++] = v;
        if (dot == tok.npos) break;
        pos = dot + 1;
    }
    if (n != 4) return std::nullopt;
    return std::pair<uint16_t, uint16_t>{uint16_t(parts[0] << 8 | parts[1]),
                                         uint16_t(parts[2] << 8 | parts[3])};
}

// Splits on ':' keeping empty tokens; fills groups, the last token may be a
// dotted quad. Returns false on malformed input.
bool parse_side(std::string_view side, std::vector<uint16_t>& out) {
    if (side.empty()) return true;
    size_t pos = 0;
    while (true) {
        size_t colon = side.find(':', pos);
        std::string_view tok = side.substr(pos, colon == side.npos ? side.npos : colon - pos);
        if (colon == side.npos && tok.find('.') != tok.npos) {
            auto q = parse_quad(tok);
            if (!q) return false;
            out.push_back(q->first);
            out.push_back(q->second);
            return true;
        }
        auto g = parse_group(tok);
        if (!g) return false;
        out.push_back(*g);
        if (colon == side.npos) return true;
        pos = colon + 1;
    }
}

}  // namespace

std::optional<Address> try_parse_address(std::string_view text) {
    if (text.empty() || text.find('%') != text.npos) return std::nullopt;

    size_t dc = text.find("::");
    std::vector<uint16_t> left, right;
    if (dc != text.npos) {
        if (text.find("::", dc + 1) != text.npos) return std::nullopt;
        if (!parse_side(text.substr(0, dc), left)) return std::nullopt;
        if (!parse_side(text.substr(dc + 2), right)) return std::nullopt;
        if (left.size() + right.size() > 7) return std::nullopt;
    } else {
        if (!parse_side(text, left)) return std::nullopt;
        if (left.size() != 8) return std::nullopt;
    }

    uint16_t groups[8] = {};
    for (size_t i = 0; i < left.size(); i++) groups[i] = left[i];
    for (size_t i = 0; i < right.size(); i++) groups[8 - right.size() + i] = right[i];

    Address a;
    for (int i = 0; i < 4; i++) a.hi = a.hi << 16 | groups[i];
    for (int i = 4; i < 8; i++) a.lo = a.lo << 16 | groups[i];
    return a;
}

Address parse_address(std::string_view text) {
    auto a = try_parse_address(text);
    if (!a) throw parse_error("bad IPv6 address: \"" + std::string(text) + "\"");
    return *a;
}

std::string format_address(const Address& a) {
    uint16_t groups[8];
    for (int i = 0; i < 8; i++) groups[i] = a.group(i);

    // Longest run of zero groups (length >= 2), leftmost wins ties.
    int best_start = -1, best_len = 0;
    for (int i = 0; i < 8;) {
        if (groups[i] != 0) { i++; continue; }
        int j = i;
        while (j < 8 && groups[j] == 0) j++;
        if (j - i > best_len) { best_start = i; best_len = j - i; }
        i = j;
    }
    if (best_len < 2) best_start = -1;

    std::string s;
    for (int i = 0; i < 8;) {
        if (i == best_start) {
            s += "::";
            i += best_len;
        } else {
            char g[6];
            std::snprintf(g, sizeof g, "%x", groups[i]);
            s += g;
            if (++i < 8 && i != best_start) s += ':';
        }
    }
    return s;
}

std::string format_address_fixed(const Address& a) {
    char buf[33];
    std::snprintf(buf, sizeof buf, "%016lx%016lx", (unsigned long)a.hi, (unsigned long)a.lo);
    return std::string(buf, 32);
}

Prefix prefix_of(const Address& a, int length) {
    if (length < 0 || length > 128)
        throw std::out_of_range("prefix length out of range: " + std::to_string(length));
    return Prefix{a.masked(length), uint8_t(length)};
}

bool contains(const Prefix& p, const Address& a) {
    return a.masked(p.length) == p.base;
}

std::string format_prefix(const Prefix& p) {
    return format_address(p.base) + "/" + std::to_string(int(p.length));
}

std::optional<Prefix> try_parse_prefix(std::string_view text) {
    size_t slash = text.rfind('/');
    if (slash == text.npos) return std::nullopt;
    int len = 0;
    auto num = text.substr(slash + 1);
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), len);
    if (ec != std::errc{} || ptr != num.data() + num.size() || len < 0 || len > 128)
        return std::nullopt;
    auto a = try_parse_address(text.substr(0, slash));
    if (!a) return std::nullopt;
    return prefix_of(*a, len);
}

}  // namespace v6taxon
