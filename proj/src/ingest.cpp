#include "v6taxon/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <string>

namespace v6taxon {

IngestSummary ingest_stream(std::istream& in, bool filter_native,
                            std::vector<Address>& persisted) {
    IngestSummary s;
    std::vector<Address> accepted;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        s.lines_read++;

        std::string_view text = line;
        size_t comma = text.find(',');
        uint64_t hits = 1;
        if (comma != text.npos) {
            std::string_view htxt = text.substr(comma + 1);
            auto [ptr, ec] = std::from_chars(htxt.data(), htxt.data() + htxt.size(), hits);
            if (ec != std::errc{} || ptr != htxt.data() + htxt.size() || hits < 1) {
                s.parse_failures++;
                continue;
            }
            text = text.substr(0, comma);
        }
        auto addr = try_parse_address(text);
        if (!addr) {
            s.parse_failures++;
            continue;
        }
        s.records_accepted++;
        FormatClass fc = classify_format(*addr);
        s.kind_tally[size_t(fc.kind)]++;
        if (filter_native && (fc.kind == Kind::Teredo || fc.kind == Kind::Sixto4 ||
                              fc.kind == Kind::Isatap))
            continue;
        accepted.push_back(*addr);
    }

    std::sort(accepted.begin(), accepted.end());
    size_t before = accepted.size();
    accepted.erase(std::unique(accepted.begin(), accepted.end()), accepted.end());
    s.duplicates_merged = before - accepted.size();
    s.persisted_addresses = accepted.size();

    uint64_t distinct_64 = 0;
    Address prev{};
    for (size_t i = 0; i < accepted.size(); i++)
        if (i == 0 || accepted[i].masked(64) != prev) {
            distinct_64++;
            prev = accepted[i].masked(64);
        }
    s.distinct_64 = distinct_64;
    s.addrs_per_64 = distinct_64 ? double(accepted.size()) / double(distinct_64) : 0.0;

    persisted = std::move(accepted);
    return s;
}

}  // namespace v6taxon
