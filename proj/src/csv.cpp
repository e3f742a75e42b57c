#include "pwapprox/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pwapprox/errors.hpp"

namespace pw::csv {

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_int(long long v) {
    char buf[24];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void Document::comment(const std::string& text) {
    if (have_header_) throw InputError("csv::Document: comments must precede the header");
    buf_ += "# ";
    buf_ += text;
    buf_ += '\n';
}

void Document::line(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) buf_ += ',';
        buf_ += cells[i];
    }
    buf_ += '\n';
}

void Document::header(std::vector<std::string> columns) {
    if (have_header_) throw InputError("csv::Document: duplicate header");
    columns_ = columns.size();
    have_header_ = true;
    line(columns);
}

void Document::row(std::vector<std::string> cells) {
    if (!have_header_) throw InputError("csv::Document: header row is mandatory");
    if (cells.size() != columns_) throw InputError("csv::Document: column count mismatch");
    line(cells);
}

void Document::write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("csv: cannot open for writing: " + path);
    out.write(buf_.data(), static_cast<std::streamsize>(buf_.size()));
    if (!out) throw InputError("csv: write failed: " + path);
}

namespace {

void write_nodes(const std::string& path, const SpectralGrid& grid,
                 const std::vector<cdouble>& values) {
    Document doc;
    doc.header({"omega", "re", "im"});
    for (std::size_t m = 0; m < grid.size(); ++m)
        doc.row({format_double(grid.node(m)), format_double(values[m].real()),
                 format_double(values[m].imag())});
    doc.write(path);
}

} // namespace

void write_spectrum(const std::string& path, const Spectrum& s) {
    write_nodes(path, s.grid, s.values);
}

void write_transfer(const std::string& path, const TransferFunction& t) {
    write_nodes(path, t.grid, t.values);
}

void write_measurements(const std::string& path, const std::vector<long>& labels,
                        const std::vector<cdouble>& values) {
    if (labels.size() != values.size())
        throw InputError("write_measurements: labels/values size mismatch");
    Document doc;
    doc.header({"n", "re", "im"});
    for (std::size_t i = 0; i < labels.size(); ++i)
        doc.row({format_int(labels[i]), format_double(values[i].real()),
                 format_double(values[i].imag())});
    doc.write(path);
}

Spectrum read_spectrum(const std::string& path, double band) {
    std::ifstream in(path);
    if (!in) throw InputError("csv: cannot open for reading: " + path);

    std::string line;
    std::vector<cdouble> values;
    std::vector<double> omegas;
    bool saw_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!saw_header) {
            if (line != "omega,re,im")
                throw InputError("csv: expected header omega,re,im, got: " + line);
            saw_header = true;
            continue;
        }
        double cells[3];
        const char* p = line.data();
        const char* end = line.data() + line.size();
        for (int c = 0; c < 3; ++c) {
            auto res = std::from_chars(p, end, cells[c]);
            if (res.ec != std::errc{}) throw InputError("csv: bad number in line: " + line);
            p = res.ptr;
            if (c < 2) {
                if (p == end || *p != ',') throw InputError("csv: expected comma in line: " + line);
                ++p;
            }
        }
        omegas.push_back(cells[0]);
        values.push_back(cdouble{cells[1], cells[2]});
    }
    if (!saw_header) throw InputError("csv: missing header in " + path);

    SpectralGrid grid(values.size());
    for (std::size_t m = 0; m < omegas.size(); ++m)
        if (std::abs(omegas[m] - grid.node(m)) > 1e-12)
            throw InputError("csv: omega column does not match a uniform grid");
    return Spectrum(grid, std::move(values), band);
}

} // namespace pw::csv
