#pragma once

#include <map>
#include <span>
#include <vector>

#include "v6taxon/address.hpp"

namespace v6taxon {

struct DayRange {
    int first = 0;
    int last = 0;  // inclusive

    bool overlaps(const DayRange& o) const {
        return first <= o.last && o.first <= last;
    }
};

// Per-day deduplicated sorted address sets, keyed by day index
// (days since 1970-01-01).
class ObservationLog {
public:
    // Union-merges; idempotent for repeats.
    void record_day(int day, std::span<const Address> addresses);

    const std::vector<Address>* day(int day_index) const;
    const std::map<int, std::vector<Address>>& days() const { return days_; }

    // Addresses active on reference_day with two active days d1 < d2 inside
    // [reference_day - before, reference_day + after] and d2 - d1 >= n.
    // slew_tolerance widens the requirement to d2 - d1 >= n - slew_tolerance.
    std::vector<Address> nd_stable(int reference_day, int n, int before = 7,
                                   int after = 7, int slew_tolerance = 0) const;

    // Intersection of the per-period unions. Ranges must be disjoint.
    std::vector<Address> stable_across(const DayRange& period_a,
                                       const DayRange& period_b) const;

    // Union of nd_stable over the 7 reference days.
    std::vector<Address> weekly_unique_stable(std::span<const int> reference_days,
                                              int n, int before = 7, int after = 7,
                                              int slew_tolerance = 0) const;

    std::vector<Address> active_union(const DayRange& period) const;

    // Derived log with every address mapped through its length-p prefix base.
    ObservationLog mapped_to_prefix(int length) const;

private:
    std::map<int, std::vector<Address>> days_;
};

}  // namespace v6taxon
