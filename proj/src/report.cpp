#include "v6taxon/report.hpp"

#include <cmath>
#include <cstdio>

namespace v6taxon {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

void write_mra_csv(std::ostream& out, std::span<const MraRatioSeries> series) {
    out << "k,p,n_p,n_p_plus_k,ratio\n";
    for (const MraRatioSeries& s : series) {
        for (const MraPoint& pt : s.points)
            out << s.k << ',' << pt.p << ',' << pt.n_p << ',' << pt.n_p_plus_k << ','
                << fmt(pt.ratio()) << '\n';
        auto [num, den] = mra_ratio_product(s);
        out << "product," << s.k << ",,," << num / den << '\n';
    }
}

void write_mra_svg(std::ostream& out, std::span<const MraRatioSeries> series) {
    const int w = 760, h = 420, ml = 60, mr = 20, mt = 20, mb = 40;
    const double px = double(w - ml - mr) / 128.0;
    const double ymax = 16.0;  // log2 scale top = 2^16
    auto xpos = [&](double p) { return ml + p * px; };
    auto ypos = [&](double ratio) {
        double l = std::log2(std::max(ratio, 1.0));
        return mt + (1.0 - l / ymax) * (h - mt - mb);
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
        << h << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // gridlines at powers of two and 16-bit segment boundaries
    for (int e = 0; e <= 16; e += 4) {
        double y = ypos(std::ldexp(1.0, e));
        out << "<line x1=\"" << ml << "\" y1=\"" << y << "\" x2=\"" << w - mr
            << "\" y2=\"" << y << "\" stroke=\"#ddd\"/>\n"
            << "<text x=\"8\" y=\"" << y + 4 << "\" font-size=\"12\">2^" << e
            << "</text>\n";
    }
    for (int p = 0; p <= 128; p += 16) {
        out << "<line x1=\"" << xpos(p) << "\" y1=\"" << mt << "\" x2=\"" << xpos(p)
            << "\" y2=\"" << h - mb << "\" stroke=\"#eee\"/>\n"
            << "<text x=\"" << xpos(p) - 8 << "\" y=\"" << h - mb + 16
            << "\" font-size=\"12\">" << p << "</text>\n";
    }
    const char* colors[] = {"#1f4fd8", "#000000", "#d82020", "#20a020"};
    int ci = 0;
    for (const MraRatioSeries& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << colors[ci % 4]
            << "\" stroke-width=\"1.5\" points=\"";
        for (const MraPoint& pt : s.points)
            out << xpos(pt.p) << ',' << ypos(pt.ratio()) << ' ';
        out << "\"/>\n";
        out << "<text x=\"" << w - mr - 120 << "\" y=\"" << mt + 16 + 16 * ci
            << "\" font-size=\"12\" fill=\"" << colors[ci % 4] << "\">" << s.k
            << "-bit segments</text>\n";
        ci++;
    }
    out << "<text x=\"" << w / 2 - 40 << "\" y=\"" << h - 8
        << "\" font-size=\"12\">bit position p</text>\n</svg>\n";
}

void write_dense_plain(std::ostream& out, const DensePrefixReport& report) {
    for (const DenseEntry& e : report.entries)
        out << format_prefix(e.prefix) << ' ' << e.count << '\n';
}

void write_dense_csv(std::ostream& out, const DensePrefixReport& report) {
    out << "prefix,len,count,span,density\n";
    for (const DenseEntry& e : report.entries)
        out << format_address(e.prefix.base) << ',' << int(e.prefix.length) << ','
            << e.count << ',' << mul_pow2_decimal(1, 128 - e.prefix.length) << ','
            << density_decimal(e.count, e.prefix.length) << '\n';
}

void write_density_table_csv(std::ostream& out, std::span<const DensityReportRow> rows) {
    out << "n,p,dense_prefixes,contained_addresses,possible_addresses,density\n";
    for (const DensityReportRow& r : rows) {
        char d[32];
        std::snprintf(d, sizeof d, "%.10f", r.density);
        out << r.cls.n << ',' << r.cls.p << ',' << r.dense_prefix_count << ','
            << r.contained_address_count << ',' << r.possible_addresses << ',' << d
            << '\n';
    }
}

void write_popdist_csv(std::ostream& out, const PopulationDistribution& dist) {
    out << "x,ccdf\n";
    for (const auto& [x, f] : dist.ccdf) out << x << ',' << fmt(f) << '\n';
}

}  // namespace v6taxon
