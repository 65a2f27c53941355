// CSV serialization for grid and spectral data. Each file starts with a
// one-line JSON comment carrying the grid metadata, followed by a column
// header and %.17g-formatted rows, so files round-trip bit-exactly.
#pragma once

#include <string>

#include "riscat/grid_function.hpp"
#include "riscat/spectral_function.hpp"

namespace riscat {

std::string format_double(double v);

void write_grid_csv(const std::string& path, const GridFunction& g);
GridFunction read_grid_csv(const std::string& path);

void write_spectral_csv(const std::string& path, const SpectralFunction& s);
SpectralFunction read_spectral_csv(const std::string& path);

}  // namespace riscat
