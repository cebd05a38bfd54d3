#include "bench/report.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace isfsf::bench {

namespace {

std::string format(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

}  // namespace

std::string format_param(double v) { return format("%g", v); }
std::string format_value(double v) { return format("%.17g", v); }

std::string join_params(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ';';
        out += format_param(values[i]);
    }
    return out;
}

const char* BenchmarkReport::csv_header() {
    return "benchmark,method,family,D,R,gamma,zeta,C_requested,C_realized,"
           "lengthscale,period,seed,metric,value,wall_ms";
}

void BenchmarkReport::write_csv(std::ostream& out) const {
    out << csv_header() << '\n';
    for (const ReportRow& r : rows_) {
        out << r.benchmark << ',' << r.method << ',' << r.family << ',';
        if (r.dimension) out << *r.dimension;
        out << ',';
        if (r.refinement) out << format_param(*r.refinement);
        out << ',' << r.gamma << ',';
        if (r.zeta) out << format_param(*r.zeta);
        out << ',';
        if (r.c_requested) out << *r.c_requested;
        out << ',';
        if (r.c_realized) out << *r.c_realized;
        out << ',' << r.lengthscale << ',' << r.period << ',';
        if (r.seed) out << *r.seed;
        out << ',' << r.metric << ',' << format_value(r.value) << ',' << r.wall_ms << '\n';
    }
}

void BenchmarkReport::write_csv_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    write_csv(out);
}

}  // namespace isfsf::bench
