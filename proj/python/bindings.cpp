#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

#include "v6taxon/ingest.hpp"
#include "v6taxon/spatial.hpp"
#include "v6taxon/synth.hpp"
#include "v6taxon/temporal.hpp"

namespace py = pybind11;
using namespace v6taxon;

namespace {

std::vector<Address> to_addrs(const std::vector<std::string>& texts) {
    std::vector<Address> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(parse_address(t));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::string> to_strs(const std::vector<Address>& addrs) {
    std::vector<std::string> out;
    out.reserve(addrs.size());
    for (const Address& a : addrs) out.push_back(format_address(a));
    return out;
}

SynthScheme scheme_from(const std::string& name) {
    if (name == "privacy") return SynthScheme::Privacy;
    if (name == "eui64") return SynthScheme::Eui64;
    if (name == "sequential-pool") return SynthScheme::SequentialPool;
    if (name == "dynamic-64-pool") return SynthScheme::Dynamic64Pool;
    throw std::invalid_argument("unknown synth scheme: " + name);
}

}  // namespace

PYBIND11_MODULE(_v6taxon, m) {
    m.doc() = "IPv6 active-address temporal/spatial classification";

    m.def("canonical", [](const std::string& t) { return format_address(parse_address(t)); });
    m.def("fixed_hex", [](const std::string& t) { return format_address_fixed(parse_address(t)); });
    m.def("prefix_of", [](const std::string& t, int len) {
        return format_prefix(prefix_of(parse_address(t), len));
    });
    m.def("contains", [](const std::string& prefix, const std::string& addr) {
        auto p = try_parse_prefix(prefix);
        if (!p) throw std::invalid_argument("bad prefix: " + prefix);
        return contains(*p, parse_address(addr));
    });

    m.def("classify", [](const std::string& t) {
        FormatClass fc = classify_format(parse_address(t));
        py::dict d;
        d["kind"] = kind_name(fc.kind);
        d["embedded_ipv4"] =
            fc.embedded_ipv4 ? py::object(py::str(format_ipv4(*fc.embedded_ipv4))) : py::none();
        d["mac"] = fc.mac ? py::object(py::str(format_mac(*fc.mac))) : py::none();
        d["eui64_layout"] = fc.eui64_layout;
        return d;
    });
    m.def("u_bit", [](const std::string& t) { return u_bit(parse_address(t)); });

    m.def("aggregate_counts", [](const std::vector<std::string>& texts) {
        auto n = aggregate_counts(to_addrs(texts)).n;
        return std::vector<uint64_t>(n.begin(), n.end());
    });
    m.def("mra_ratios", [](const std::vector<std::string>& texts, int k) {
        auto s = mra_ratios(aggregate_counts(to_addrs(texts)), k);
        std::vector<std::tuple<int, uint64_t, uint64_t, double>> out;
        for (const auto& pt : s.points)
            out.emplace_back(pt.p, pt.n_p, pt.n_p_plus_k, pt.ratio());
        return out;
    });

    m.def("densify", [](const std::vector<std::string>& texts, uint64_t n, int p) {
        CountingTrie t;
        for (const Address& a : to_addrs(texts)) t.insert(a);
        std::vector<std::pair<std::string, uint64_t>> out;
        for (const auto& e : t.densify({n, p}).entries)
            out.emplace_back(format_prefix(e.prefix), e.count);
        return out;
    });
    m.def("dense_fixed_length", [](const std::vector<std::string>& texts, uint64_t n, int p) {
        std::vector<std::pair<std::string, uint64_t>> out;
        for (const auto& e : dense_fixed_length(to_addrs(texts), {n, p}).entries)
            out.emplace_back(format_prefix(e.prefix), e.count);
        return out;
    });

    m.def(
        "nd_stable",
        [](const std::map<int, std::vector<std::string>>& days, int ref, int n, int before,
           int after) {
            ObservationLog log;
            for (const auto& [d, texts] : days) log.record_day(d, to_addrs(texts));
            return to_strs(log.nd_stable(ref, n, before, after));
        },
        py::arg("days"), py::arg("ref"), py::arg("n"), py::arg("before") = 7,
        py::arg("after") = 7);

    m.def(
        "synth",
        [](const std::string& scheme, uint64_t seed, uint64_t count, uint64_t num_64s,
           uint64_t per_64) {
            SynthParams p;
            p.seed = seed;
            p.count = count;
            p.num_64s = num_64s;
            p.per_64 = per_64;
            return to_strs(synth(scheme_from(scheme), p));
        },
        py::arg("scheme"), py::arg("seed") = 1, py::arg("count") = 1,
        py::arg("num_64s") = 1, py::arg("per_64") = 1);
}
