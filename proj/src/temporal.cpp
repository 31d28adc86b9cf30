#include "v6taxon/temporal.hpp"

#include <algorithm>
#include <stdexcept>

namespace v6taxon {

namespace {

void merge_into(std::vector<Address>& dst, std::span<const Address> src) {
    std::vector<Address> add(src.begin(), src.end());
    std::sort(add.begin(), add.end());
    add.erase(std::unique(add.begin(), add.end()), add.end());
    std::vector<Address> out;
    out.reserve(dst.size() + add.size());
    std::set_union(dst.begin(), dst.end(), add.begin(), add.end(),
                   std::back_inserter(out));
    dst = std::move(out);
}

}  // namespace

void ObservationLog::record_day(int day, std::span<const Address> addresses) {
    merge_into(days_[day], addresses);
}

const std::vector<Address>* ObservationLog::day(int day_index) const {
    auto it = days_.find(day_index);
    return it == days_.end() ? nullptr : &it->second;
}

std::vector<Address> ObservationLog::nd_stable(int reference_day, int n, int before,
                                               int after, int slew_tolerance) const {
    auto it = days_.find(reference_day);
    if (it == days_.end())
        throw std::invalid_argument("reference day " + std::to_string(reference_day) +
                                    " not present in log");
    if (n < 1) throw std::invalid_argument("n must be >= 1");

    const std::vector<Address>& ref = it->second;
    // A qualifying pair exists iff (last active day - first active day)
    // within the window >= n.
    std::vector<int> first_seen(ref.size(), reference_day);
    std::vector<int> last_seen(ref.size(), reference_day);

    auto lo = days_.lower_bound(reference_day - before);
    auto hi = days_.upper_bound(reference_day + after);
    for (auto d = lo; d != hi; ++d) {
        if (d->first == reference_day) continue;
        const std::vector<Address>& set = d->second;
        size_t i = 0, j = 0;
        while (i < ref.size() && j < set.size()) {
            if (ref[i] < set[j]) i++;
            else if (set[j] < ref[i]) j++;
            else {
                first_seen[i] = std::min(first_seen[i], d->first);
                last_seen[i] = std::max(last_seen[i], d->first);
                i++, j++;
            }
        }
    }

    std::vector<Address> out;
    for (size_t i = 0; i < ref.size(); i++)
        if (last_seen[i] - first_seen[i] >= n - slew_tolerance) out.push_back(ref[i]);
    return out;
}

std::vector<Address> ObservationLog::active_union(const DayRange& period) const {
    std::vector<Address> out;
    auto lo = days_.lower_bound(period.first);
    auto hi = days_.upper_bound(period.last);
    for (auto d = lo; d != hi; ++d) merge_into(out, d->second);
    return out;
}

std::vector<Address> ObservationLog::stable_across(const DayRange& period_a,
                                                   const DayRange& period_b) const {
    if (period_a.overlaps(period_b))
        throw std::invalid_argument("stability periods overlap");
    std::vector<Address> a = active_union(period_a);
    std::vector<Address> b = active_union(period_b);
    std::vector<Address> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

std::vector<Address> ObservationLog::weekly_unique_stable(
    std::span<const int> reference_days, int n, int before, int after,
    int slew_tolerance) const {
    std::vector<Address> out;
    for (int d : reference_days)
        merge_into(out, nd_stable(d, n, before, after, slew_tolerance));
    return out;
}

ObservationLog ObservationLog::mapped_to_prefix(int length) const {
    ObservationLog mapped;
    for (const auto& [day, set] : days_) {
        std::vector<Address> bases;
        bases.reserve(set.size());
        for (const Address& a : set) bases.push_back(a.masked(length));
        mapped.record_day(day, bases);
    }
    return mapped;
}

}  // namespace v6taxon
