#pragma once

#include <ostream>
#include <span>

#include "v6taxon/spatial.hpp"

namespace v6taxon {

// "k,p,n_p,n_p_plus_k,ratio" rows; one "product,k,,,<N>" footer per series.
void write_mra_csv(std::ostream& out, std::span<const MraRatioSeries> series);

// Ratio vs. p on a logarithmic y axis spanning [1, 2^16], one polyline
// per resolution.
void write_mra_svg(std::ostream& out, std::span<const MraRatioSeries> series);

// Plain: "<prefix>/<len> <count>" lines, prefix numeric order.
void write_dense_plain(std::ostream& out, const DensePrefixReport& report);
// CSV: "prefix,len,count,span,density".
void write_dense_csv(std::ostream& out, const DensePrefixReport& report);

// Table-style CSV: "n,p,dense_prefixes,contained_addresses,possible_addresses,density".
void write_density_table_csv(std::ostream& out, std::span<const DensityReportRow> rows);

// "x,ccdf" breakpoint rows.
void write_popdist_csv(std::ostream& out, const PopulationDistribution& dist);

}  // namespace v6taxon
