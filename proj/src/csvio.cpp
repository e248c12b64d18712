#include "teich/csvio.hpp"

#include <cmath>
#include <cstdio>

namespace teich {

std::string fmt17(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string csvField(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string coordsField(const std::array<double, 3>& c) {
    return fmt17(c[0]) + ";" + fmt17(c[1]) + ";" + fmt17(c[2]);
}

void writeSpectrumCsv(const std::vector<SpectrumEntry>& spectrum, std::ostream& os) {
    os << "class,length\n";
    for (const auto& e : spectrum)
        os << csvField(label(e.curveClass)) << "," << fmt17(e.length) << "\n";
}

void writeNielsenCsv(const NielsenLedger& ledger, std::ostream& os) {
    os << "stage,boundary_index,modulus_lb,length_ub,tbar_lb\n";
    for (const auto& st : ledger.stages)
        for (int i = 0; i < 3; ++i)
            os << st.stage << "," << (i + 1) << "," << fmt17(st.modulusLB[static_cast<std::size_t>(i)])
               << "," << fmt17(st.lengthUB[static_cast<std::size_t>(i)]) << ","
               << fmt17(st.tBarLB[static_cast<std::size_t>(i)]) << "\n";
}

void writeSweepCsv(const std::vector<ComparisonRecord>& records, std::ostream& os) {
    os << "sample_id,x_coords,y_coords,d,d_bar,delta_l,d_l,wolpert_lb,kerckhoff_lb,gap,"
          "stability_gap,maximizer_d,maximizer_dbar\n";
    for (const auto& r : records) {
        os << r.sampleId << "," << coordsField(r.xCoords) << "," << coordsField(r.yCoords) << ","
           << fmt17(r.d) << "," << fmt17(r.dBar) << "," << fmt17(r.deltaL) << "," << fmt17(r.dL)
           << "," << fmt17(r.wolpertLB) << "," << fmt17(r.kerckhoffLB) << "," << fmt17(r.gap)
           << "," << fmt17(r.stabilityGap) << "," << csvField(r.maximizerD) << ","
           << csvField(r.maximizerDBar) << "\n";
    }
}

} // namespace teich
