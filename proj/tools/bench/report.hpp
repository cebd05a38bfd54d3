#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace isfsf::bench {

// One metric observation in the long CSV layout. Optional fields print as
// empty cells when they do not apply to the row's method.
struct ReportRow {
    std::string benchmark;
    std::string method;
    std::string family;
    std::optional<int> dimension;
    std::optional<double> refinement;
    std::string gamma;       // ';'-joined per-dimension values
    std::optional<double> zeta;
    std::optional<long long> c_requested;
    std::optional<long long> c_realized;
    std::string lengthscale; // ';'-joined
    std::string period;      // ';'-joined
    std::optional<long long> seed;
    std::string metric;
    double value = 0.0;
    long long wall_ms = 0;
};

class BenchmarkReport {
public:
    static const char* csv_header();

    void add(ReportRow row) { rows_.push_back(std::move(row)); }
    const std::vector<ReportRow>& rows() const { return rows_; }

    void write_csv(std::ostream& out) const;
    void write_csv_file(const std::string& path) const;

private:
    std::vector<ReportRow> rows_;
};

// Shared formatting: parameters at %g, metric values at full %.17g fidelity.
std::string format_param(double v);
std::string format_value(double v);
std::string join_params(const std::vector<double>& values);

}  // namespace isfsf::bench
