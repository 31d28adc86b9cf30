#include "v6taxon/dayfile.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace v6taxon {

namespace chr = std::chrono;

std::optional<int> parse_day(std::string_view s) {
    if (s.size() != 8) return std::nullopt;
    for (char c : s)
        if (c < '0' || c > '9') return std::nullopt;
    int y = (s[0] - '0') * 1000 + (s[1] - '0') * 100 + (s[2] - '0') * 10 + (s[3] - '0');
    unsigned m = unsigned((s[4] - '0') * 10 + (s[5] - '0'));
    unsigned d = unsigned((s[6] - '0') * 10 + (s[7] - '0'));
    chr::year_month_day ymd{chr::year{y}, chr::month{m}, chr::day{d}};
    if (!ymd.ok()) return std::nullopt;
    return chr::sys_days{ymd}.time_since_epoch().count();
}

std::string format_day(int day_index) {
    chr::year_month_day ymd{chr::sys_days{chr::days{day_index}}};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d%02u%02u", int(ymd.year()),
                  unsigned(ymd.month()), unsigned(ymd.day()));
    return buf;
}

std::optional<std::pair<int, int>> parse_day_range(std::string_view spec) {
    size_t dash = spec.find('-');
    if (dash == spec.npos) {
        auto d = parse_day(spec);
        if (!d) return std::nullopt;
        return std::pair{*d, *d};
    }
    auto a = parse_day(spec.substr(0, dash));
    auto b = parse_day(spec.substr(dash + 1));
    if (!a || !b || *a > *b) return std::nullopt;
    return std::pair{*a, *b};
}

std::filesystem::path dayfile_path(const std::filesystem::path& dir, int day_index) {
    return dir / (format_day(day_index) + ".addrset");
}

void write_dayfile(const std::filesystem::path& path,
                   const std::vector<Address>& sorted_unique) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write day file: " + path.string());
    std::vector<char> buf;
    buf.reserve(sorted_unique.size() * 16);
    for (const Address& a : sorted_unique) {
        auto b = a.bytes();
        buf.insert(buf.end(), b.begin(), b.end());
    }
    f.write(buf.data(), std::streamsize(buf.size()));
    if (!f) throw std::runtime_error("short write: " + path.string());
}

std::vector<Address> read_dayfile(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("missing day file: " + path.string());
    std::vector<char> buf((std::istreambuf_iterator<char>(f)),
                          std::istreambuf_iterator<char>());
    if (buf.size() % 16 != 0)
        throw std::runtime_error("day file not a multiple of 16 bytes: " + path.string());
    std::vector<Address> out;
    out.reserve(buf.size() / 16);
    for (size_t i = 0; i < buf.size(); i += 16) {
        Address a = Address::from_bytes(reinterpret_cast<const uint8_t*>(buf.data() + i));
        if (!out.empty() && !(out.back() < a))
            throw std::runtime_error("day file records not strictly ascending: " +
                                     path.string());
        out.push_back(a);
    }
    return out;
}

}  // namespace v6taxon
