#pragma once

// Classification of the (a, b) parameter plane at fixed c into the region
// where the order of convexity is -infinity (black), the region covered by
// the explicit lower bound with a nonnegative value (gray), and the rest.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hypgeo {

enum class Region : std::uint8_t { Black = 0, Gray = 1, White = 2 };

std::string_view to_string(Region r) noexcept;

struct Window {
  double a_min = 0.0, a_max = 2.0;
  double b_min = 0.0, b_max = 2.0;
};

struct ScanGrid {
  double c = 1.0;
  Window window;
  int na = 0, nb = 0;
  std::vector<Region> cells;  // row-major by b ascending: cells[j * na + i]

  double a_at(int i) const { return window.a_min + (i + 0.5) * (window.a_max - window.a_min) / na; }
  double b_at(int j) const { return window.b_min + (j + 0.5) * (window.b_max - window.b_min) / nb; }
  Region at(int i, int j) const { return cells[static_cast<std::size_t>(j) * na + i]; }
};

/// Classifies the cell centres of an na x nb raster over the window. Rows
/// run in parallel through the dispatched classification kernel. Requires
/// na, nb >= 2 and a window inside [0, 4]^2 with positive extent.
ScanGrid scan_region(double c, const Window& window, int na, int nb);

/// Region of one parameter pair, by the same rule as the scan kernels.
Region classify_cell(double a, double b, double c);

/// Binary greymap "P5\n<na> <nb>\n255\n" with black 0, gray 128, white 255;
/// the first image row is the largest b.
std::string render_pgm(const ScanGrid& grid);

struct PgmImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;
};

/// Parses the binary P5 layout written by render_pgm (maxval 255, single
/// whitespace after the header fields, no comments). Throws DomainError on
/// malformed input.
PgmImage parse_pgm(std::string_view bytes);

/// Cell matrix of an image written by render_pgm. Throws DomainError on
/// pixel values other than 0, 128 and 255.
std::vector<Region> cells_from_pgm(const PgmImage& image);

/// "a,b,class,bound" followed by one line per cell (b ascending, then a),
/// numbers with 10 significant digits; bound is the explicit lower bound
/// when its hypothesis holds for (min(a,b), max(a,b), c), else empty.
std::string emit_csv(const ScanGrid& grid);

}  // namespace hypgeo
