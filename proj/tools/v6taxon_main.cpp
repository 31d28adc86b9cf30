#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "v6taxon/dayfile.hpp"
#include "v6taxon/ingest.hpp"
#include "v6taxon/report.hpp"
#include "v6taxon/synth.hpp"
#include "v6taxon/temporal.hpp"

using namespace v6taxon;
namespace fs = std::filesystem;

namespace {

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int require_day(const std::string& s) {
    auto d = parse_day(s);
    if (!d) throw CLI::ValidationError("--day", "expected YYYYMMDD, got '" + s + "'");
    return *d;
}

std::pair<int, int> require_range(const std::string& s) {
    auto r = parse_day_range(s);
    if (!r)
        throw CLI::ValidationError("--days",
                                   "expected YYYYMMDD or YYYYMMDD-YYYYMMDD, got '" + s + "'");
    return *r;
}

// Union of the day files for every day in the range; every file must exist.
std::vector<Address> load_range(const fs::path& dir, std::pair<int, int> range) {
    std::vector<Address> all;
    for (int d = range.first; d <= range.second; d++) {
        fs::path p = dayfile_path(dir, d);
        if (!fs::exists(p)) throw DataError("missing day file: " + p.string());
        auto day = read_dayfile(p);
        std::vector<Address> merged;
        std::set_union(all.begin(), all.end(), day.begin(), day.end(),
                       std::back_inserter(merged));
        all = std::move(merged);
    }
    if (all.empty()) throw DataError("no addresses in day range");
    return all;
}

ObservationLog load_log(const fs::path& dir, int first, int last, int prefix_len) {
    ObservationLog log;
    for (int d = first; d <= last; d++) {
        fs::path p = dayfile_path(dir, d);
        if (!fs::exists(p)) continue;
        log.record_day(d, read_dayfile(p));
    }
    return prefix_len > 0 && prefix_len < 128 ? log.mapped_to_prefix(prefix_len) : log;
}

std::unique_ptr<std::istream> open_input(const std::string& path) {
    if (path == "-") return std::make_unique<std::istream>(std::cin.rdbuf());
    auto f = std::make_unique<std::ifstream>(path);
    if (!*f) throw DataError("cannot read input: " + path);
    return f;
}

std::unique_ptr<std::ostream> open_output(const std::string& path) {
    if (path == "-") return std::make_unique<std::ostream>(std::cout.rdbuf());
    auto f = std::make_unique<std::ofstream>(path);
    if (!*f) throw DataError("cannot write output: " + path);
    return f;
}

DensityClass parse_class(const std::string& s) {
    size_t at = s.find('@');
    if (at == s.npos) throw CLI::ValidationError("--class", "expected n@p, got '" + s + "'");
    std::string ptxt = s.substr(at + 1);
    if (!ptxt.empty() && ptxt[0] == '/') ptxt = ptxt.substr(1);
    try {
        uint64_t n = std::stoull(s.substr(0, at));
        int p = std::stoi(ptxt);
        if (n < 1 || p < 0 || p > 127) throw std::out_of_range("class");
        return DensityClass{n, p};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--class", "expected n@p with p in 0..127, got '" + s + "'");
    }
}

int run(int argc, char** argv) {
    CLI::App app{"IPv6 active-address temporal/spatial classification toolkit"};
    app.require_subcommand(1);

    fs::path data_dir = ".";
    app.add_option("--data-dir", data_dir, "Directory holding YYYYMMDD.addrset files")
        ->capture_default_str();

    // ingest
    auto* ing = app.add_subcommand("ingest", "Parse an address list into a day file");
    std::string ing_day, ing_input = "-";
    bool ing_filter = false;
    ing->add_option("--day", ing_day, "Observation day, YYYYMMDD")->required();
    ing->add_option("--input", ing_input, "Input file, or - for stdin");
    ing->add_flag("--filter-other", ing_filter,
                  "Drop Teredo/6to4/ISATAP, keep native addresses");

    // taxonomy
    auto* tax = app.add_subcommand("taxonomy", "Classify addresses by standard format");
    std::string tax_input = "-", tax_output = "-";
    tax->add_option("--input", tax_input, "Address list, one per line");
    tax->add_option("--output", tax_output, "CSV output path");

    // stability
    auto* stab = app.add_subcommand("stability", "Temporal stability classification");
    std::string stab_ref, stab_pa, stab_pb;
    int stab_n = 3, stab_before = 7, stab_after = 7, stab_prefix = 0, stab_slew = 0;
    bool stab_list = false;
    stab->add_option("--ref-day", stab_ref, "Reference day YYYYMMDD (nd-stable mode)");
    stab->add_option("--n", stab_n, "Minimum day separation")->capture_default_str();
    stab->add_option("--before", stab_before)->capture_default_str();
    stab->add_option("--after", stab_after)->capture_default_str();
    stab->add_option("--prefix-len", stab_prefix, "0 = full address, 64 = /64 mode")
        ->capture_default_str();
    stab->add_option("--slew-tolerance", stab_slew)->capture_default_str();
    stab->add_option("--period-a", stab_pa, "Later period YYYYMMDD-YYYYMMDD (cross mode)");
    stab->add_option("--period-b", stab_pb, "Earlier period YYYYMMDD-YYYYMMDD");
    stab->add_flag("--list", stab_list, "Print members, not just the count");

    // mra
    auto* mra = app.add_subcommand("mra", "Multi-resolution aggregate count ratios");
    std::string mra_days, mra_csv = "-", mra_svg;
    std::vector<int> mra_k{1, 4, 16};
    mra->add_option("--days", mra_days, "YYYYMMDD or YYYYMMDD-YYYYMMDD")->required();
    mra->add_option("--k", mra_k, "Resolutions from {1,4,8,16}")->capture_default_str();
    mra->add_option("--csv", mra_csv, "CSV output path");
    mra->add_option("--svg", mra_svg, "Also render an SVG plot");

    // densify
    auto* dns = app.add_subcommand("densify", "Dense prefix discovery");
    std::string dns_class, dns_days, dns_csv;
    bool dns_fixed = false;
    dns->add_option("--class", dns_class, "Density class n@p, e.g. 2@112")->required();
    dns->add_option("--days", dns_days)->required();
    dns->add_flag("--fixed-length", dns_fixed, "Only prefixes of exactly length p");
    dns->add_option("--csv", dns_csv, "CSV output path (default: plain lines to stdout)");

    // popdist
    auto* pop = app.add_subcommand("popdist", "Aggregate population distribution (CCDF)");
    std::string pop_days, pop_output = "-";
    int pop_p = 64;
    pop->add_option("--p", pop_p, "Aggregate prefix length")->capture_default_str();
    pop->add_option("--days", pop_days)->required();
    pop->add_option("--output", pop_output);

    // synth
    auto* syn = app.add_subcommand("synth", "Deterministic synthetic address logs");
    std::string syn_scheme, syn_base = "2001:db8::/32", syn_output = "-", syn_day;
    SynthParams sp;
    syn->add_option("--scheme", syn_scheme,
                    "privacy | eui64 | sequential-pool | dynamic-64-pool")
        ->required();
    syn->add_option("--seed", sp.seed)->capture_default_str();
    syn->add_option("--count", sp.count)->capture_default_str();
    syn->add_option("--num-64s", sp.num_64s)->capture_default_str();
    syn->add_option("--per-64", sp.per_64)->capture_default_str();
    syn->add_option("--pool-size", sp.pool_size)->capture_default_str();
    syn->add_option("--day", syn_day, "YYYYMMDD; varies dynamic-64-pool draws");
    syn->add_option("--base", syn_base, "Base prefix for generated addresses")
        ->capture_default_str();
    syn->add_option("--output", syn_output);

    for (CLI::App* sc : app.get_subcommands(nullptr))
        sc->fallthrough();  // lets --data-dir appear after the subcommand

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (ing->parsed()) {
        int day = require_day(ing_day);
        auto in = open_input(ing_input);
        std::vector<Address> persisted;
        IngestSummary s = ingest_stream(*in, ing_filter, persisted);
        fs::create_directories(data_dir);
        write_dayfile(dayfile_path(data_dir, day), persisted);
        std::cout << "day " << format_day(day) << "\n"
                  << "lines_read " << s.lines_read << "\n"
                  << "records_accepted " << s.records_accepted << "\n"
                  << "parse_failures " << s.parse_failures << "\n"
                  << "duplicates_merged " << s.duplicates_merged << "\n";
        for (int k = 0; k < kKindCount; k++)
            std::cout << kind_name(Kind(k)) << ' ' << s.kind_tally[size_t(k)] << "\n";
        std::cout << "persisted " << s.persisted_addresses << "\n"
                  << "distinct_64 " << s.distinct_64 << "\n";
        char avg[32];
        std::snprintf(avg, sizeof avg, "%.2f", s.addrs_per_64);
        std::cout << "addrs_per_64 " << avg << "\n";
        return 0;
    }

    if (tax->parsed()) {
        auto in = open_input(tax_input);
        auto out = open_output(tax_output);
        *out << "address,kind,embedded_ipv4,mac\n";
        std::string line;
        while (std::getline(*in, line)) {
            if (line.empty()) continue;
            auto a = try_parse_address(line);
            if (!a) throw DataError("bad address in taxonomy input: '" + line + "'");
            FormatClass fc = classify_format(*a);
            *out << format_address(*a) << ',' << kind_name(fc.kind) << ','
                 << (fc.embedded_ipv4 ? format_ipv4(*fc.embedded_ipv4) : "") << ','
                 << (fc.mac ? format_mac(*fc.mac) : "") << '\n';
        }
        return 0;
    }

    if (stab->parsed()) {
        if (!stab_pa.empty() || !stab_pb.empty()) {
            if (stab_pa.empty() || stab_pb.empty())
                throw CLI::ValidationError("--period-a/--period-b",
                                           "both periods are required in cross mode");
            auto ra = require_range(stab_pa);
            auto rb = require_range(stab_pb);
            ObservationLog log = load_log(data_dir, std::min(ra.first, rb.first),
                                          std::max(ra.second, rb.second), stab_prefix);
            if (!log.day(ra.first) && !log.day(ra.second))
                throw DataError("no day files in period " + stab_pa);
            auto s = log.stable_across({ra.first, ra.second}, {rb.first, rb.second});
            std::cout << "stable-across " << stab_pa << " " << stab_pb << " " << s.size()
                      << "\n";
            if (stab_list)
                for (const Address& a : s) std::cout << format_address(a) << "\n";
            return 0;
        }
        if (stab_ref.empty())
            throw CLI::ValidationError("--ref-day", "required unless using --period-a/b");
        int ref = require_day(stab_ref);
        if (!fs::exists(dayfile_path(data_dir, ref)))
            throw DataError("missing day file: " + dayfile_path(data_dir, ref).string());
        ObservationLog log =
            load_log(data_dir, ref - stab_before, ref + stab_after, stab_prefix);
        auto s = log.nd_stable(ref, stab_n, stab_before, stab_after, stab_slew);
        std::cout << stab_n << "d-stable (-" << stab_before << "d,+" << stab_after
                  << "d) " << s.size() << "\n";
        if (stab_list)
            for (const Address& a : s) std::cout << format_address(a) << "\n";
        return 0;
    }

    if (mra->parsed()) {
        auto addrs = load_range(data_dir, require_range(mra_days));
        auto counts = aggregate_counts(addrs);
        std::vector<MraRatioSeries> series;
        for (int k : mra_k) series.push_back(mra_ratios(counts, k));
        auto out = open_output(mra_csv);
        write_mra_csv(*out, series);
        if (!mra_svg.empty()) {
            auto svg = open_output(mra_svg);
            write_mra_svg(*svg, series);
        }
        return 0;
    }

    if (dns->parsed()) {
        DensityClass cls = parse_class(dns_class);
        auto addrs = load_range(data_dir, require_range(dns_days));
        DensePrefixReport rep;
        if (dns_fixed) {
            rep = dense_fixed_length(addrs, cls);
        } else {
            CountingTrie t;
            for (const Address& a : addrs) t.insert(a);
            rep = t.densify(cls);
        }
        if (dns_csv.empty()) {
            write_dense_plain(std::cout, rep);
        } else {
            auto out = open_output(dns_csv);
            write_dense_csv(*out, rep);
        }
        return 0;
    }

    if (pop->parsed()) {
        auto addrs = load_range(data_dir, require_range(pop_days));
        auto dist = population_distribution(addrs, pop_p);
        auto out = open_output(pop_output);
        write_popdist_csv(*out, dist);
        return 0;
    }

    if (syn->parsed()) {
        SynthScheme scheme;
        if (syn_scheme == "privacy") scheme = SynthScheme::Privacy;
        else if (syn_scheme == "eui64") scheme = SynthScheme::Eui64;
        else if (syn_scheme == "sequential-pool") scheme = SynthScheme::SequentialPool;
        else if (syn_scheme == "dynamic-64-pool") scheme = SynthScheme::Dynamic64Pool;
        else throw CLI::ValidationError("--scheme", "unknown scheme '" + syn_scheme + "'");
        if (!syn_day.empty()) sp.day = require_day(syn_day);
        auto base = try_parse_prefix(syn_base);
        if (!base || base->length > 64)
            throw CLI::ValidationError("--base", "expected a prefix of /64 or shorter");
        sp.base = *base;
        auto out = open_output(syn_output);
        synth_lines(*out, scheme, sp);
        return 0;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
