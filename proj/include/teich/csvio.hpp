#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "teich/extremal.hpp"
#include "teich/thick.hpp"

namespace teich {

// Fixed 17-significant-digit scientific notation; byte-stable across runs.
std::string fmt17(double v);

// RFC-4180 quoting applied exactly when needed (labels may contain commas).
std::string csvField(const std::string& s);

std::string coordsField(const std::array<double, 3>& c); // semicolon-joined fmt17

void writeSpectrumCsv(const std::vector<SpectrumEntry>& spectrum, std::ostream& os);

// Header: stage,boundary_index,modulus_lb,length_ub,tbar_lb; stage-major rows.
void writeNielsenCsv(const NielsenLedger& ledger, std::ostream& os);

// Header: sample_id,x_coords,y_coords,d,d_bar,delta_l,d_l,wolpert_lb,
//         kerckhoff_lb,gap,stability_gap,maximizer_d,maximizer_dbar
void writeSweepCsv(const std::vector<ComparisonRecord>& records, std::ostream& os);

} // namespace teich
