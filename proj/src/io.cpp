#include "riscat/io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace riscat {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

static json read_header_line(std::istream& in, const std::string& path) {
    std::string line;
    if (!std::getline(in, line) || line.size() < 2 || line[0] != '#')
        throw std::runtime_error(path + ": missing metadata header line");
    return json::parse(line.substr(1));
}

static void parse_row(const std::string& line, double* cols, int ncols, const std::string& path) {
    std::istringstream ss(line);
    std::string cell;
    for (int c = 0; c < ncols; ++c) {
        if (!std::getline(ss, cell, ','))
            throw std::runtime_error(path + ": short row '" + line + "'");
        if (cell == "inf")
            cols[c] = std::numeric_limits<double>::infinity();
        else if (cell == "-inf")
            cols[c] = -std::numeric_limits<double>::infinity();
        else
            cols[c] = std::stod(cell);
    }
}

void write_grid_csv(const std::string& path, const GridFunction& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    json meta = {{"x_start", g.x_start},
                 {"dx", g.dx},
                 {"n", g.size()},
                 {"kind", g.kind == ValueKind::real ? "real" : "complex"}};
    out << "# " << meta.dump() << "\n";
    out << "x,re,im\n";
    for (std::size_t j = 0; j < g.size(); ++j)
        out << format_double(g.x(j)) << ',' << format_double(g.values[j].real()) << ','
            << format_double(g.values[j].imag()) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

GridFunction read_grid_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    json meta = read_header_line(in, path);
    GridFunction g(meta.at("x_start").get<double>(), meta.at("dx").get<double>(),
                   meta.at("n").get<std::size_t>(),
                   meta.at("kind").get<std::string>() == "real" ? ValueKind::real
                                                                : ValueKind::complex);
    std::string line;
    std::getline(in, line);  // column header
    std::size_t j = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (j >= g.size()) throw std::runtime_error(path + ": more rows than header n");
        double c[3];
        parse_row(line, c, 3, path);
        g.values[j] = cplx(c[1], c[2]);
        ++j;
    }
    if (j != g.size()) throw std::runtime_error(path + ": fewer rows than header n");
    return g;
}

void write_spectral_csv(const std::string& path, const SpectralFunction& s) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    json meta = {{"dk", s.dk}, {"m", s.m}};
    out << "# " << meta.dump() << "\n";
    out << "k,re,im\n";
    for (std::size_t j = 0; j < s.size(); ++j)
        out << format_double(s.k(j)) << ',' << format_double(s.values[j].real()) << ','
            << format_double(s.values[j].imag()) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

SpectralFunction read_spectral_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    json meta = read_header_line(in, path);
    SpectralFunction s(meta.at("dk").get<double>(), meta.at("m").get<std::size_t>());
    std::string line;
    std::getline(in, line);
    std::size_t j = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (j >= s.size()) throw std::runtime_error(path + ": more rows than expected 2m+1");
        double c[3];
        parse_row(line, c, 3, path);
        s.values[j] = cplx(c[1], c[2]);
        ++j;
    }
    if (j != s.size()) throw std::runtime_error(path + ": fewer rows than expected 2m+1");
    return s;
}

}  // namespace riscat
