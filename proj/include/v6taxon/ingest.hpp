#pragma once

#include <array>
#include <istream>
#include <vector>

#include "v6taxon/address.hpp"
#include "v6taxon/taxonomy.hpp"

namespace v6taxon {

struct IngestSummary {
    uint64_t lines_read = 0;
    uint64_t records_accepted = 0;
    uint64_t parse_failures = 0;
    uint64_t duplicates_merged = 0;
    std::array<uint64_t, kKindCount> kind_tally{};  // indexed by Kind, per accepted record
    uint64_t persisted_addresses = 0;
    uint64_t distinct_64 = 0;
    double addrs_per_64 = 0.0;
};

// Lines are "<address>" or "<address>,<hits>". Malformed lines are counted
// and skipped. With filter_native, Teredo/6to4/ISATAP addresses are tallied
// but not persisted. The persisted set comes back sorted and deduplicated.
IngestSummary ingest_stream(std::istream& in, bool filter_native,
                            std::vector<Address>& persisted);

}  // namespace v6taxon
