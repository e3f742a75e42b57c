#pragma once

#include <string>
#include <vector>

#include "pwapprox/spectrum.hpp"

namespace pw::csv {

// Shortest decimal form that round-trips to the same double.
std::string format_double(double v);
std::string format_int(long long v);

// Accumulates a CSV document: `#`-prefixed comment lines, one header row,
// data rows. Comma separator, '.' decimal point, LF line endings.
class Document {
public:
    void comment(const std::string& text);
    void header(std::vector<std::string> columns);
    void row(std::vector<std::string> cells);

    const std::string& text() const noexcept { return buf_; }
    void write(const std::string& path) const; // binary mode, byte-exact

private:
    void line(const std::vector<std::string>& cells);
    std::string buf_;
    std::size_t columns_ = 0;
    bool have_header_ = false;
};

// Spectral CSV contract: header "omega,re,im", one row per grid node, values
// in round-trip precision.
void write_spectrum(const std::string& path, const Spectrum& s);
void write_transfer(const std::string& path, const TransferFunction& t);
Spectrum read_spectrum(const std::string& path, double band = kPi);

// Measurement vectors: header "n,re,im", one row per functional.
void write_measurements(const std::string& path, const std::vector<long>& labels,
                        const std::vector<cdouble>& values);

} // namespace pw::csv
