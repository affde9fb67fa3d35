#include "hypgeo/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hypgeo/bounds.hpp"
#include "hypgeo/errors.hpp"
#include "hypgeo/kernels.hpp"
#include "parallel.hpp"

namespace hypgeo {
namespace {

std::uint8_t pixel(Region r) {
  switch (r) {
    case Region::Black: return 0;
    case Region::Gray: return 128;
    case Region::White: return 255;
  }
  return 255;
}

}  // namespace

std::string_view to_string(Region r) noexcept {
  switch (r) {
    case Region::Black: return "black";
    case Region::Gray: return "gray";
    case Region::White: return "white";
  }
  return "white";
}

Region classify_cell(double a, double b, double c) {
  std::uint8_t code = kernels::kWhite;
  kernels::scalar::classify_row(c, b, std::span<const double>(&a, 1),
                                std::span<std::uint8_t>(&code, 1));
  return static_cast<Region>(code);
}

ScanGrid scan_region(double c, const Window& window, int na, int nb) {
  const auto inside = [](double lo, double hi) { return 0.0 <= lo && lo < hi && hi <= 4.0; };
  if (na < 2 || nb < 2 || !inside(window.a_min, window.a_max) ||
      !inside(window.b_min, window.b_max) || !std::isfinite(c)) {
    throw DomainError("scan_region needs na, nb >= 2 and a window inside [0, 4]^2");
  }
  ScanGrid grid;
  grid.c = c;
  grid.window = window;
  grid.na = na;
  grid.nb = nb;
  grid.cells.resize(static_cast<std::size_t>(na) * nb);
  std::vector<double> a(na);
  for (int i = 0; i < na; ++i) a[i] = grid.a_at(i);
  static_assert(sizeof(Region) == sizeof(std::uint8_t));
  detail::parallel_for(static_cast<std::size_t>(nb), [&](std::size_t j) {
    auto* row = reinterpret_cast<std::uint8_t*>(grid.cells.data() + j * na);
    kernels::classify_row(c, grid.b_at(static_cast<int>(j)), a,
                          std::span<std::uint8_t>(row, static_cast<std::size_t>(na)));
  });
  return grid;
}

std::string render_pgm(const ScanGrid& grid) {
  std::string out = "P5\n" + std::to_string(grid.na) + " " + std::to_string(grid.nb) + "\n255\n";
  out.reserve(out.size() + grid.cells.size());
  for (int j = grid.nb - 1; j >= 0; --j) {
    for (int i = 0; i < grid.na; ++i) out.push_back(static_cast<char>(pixel(grid.at(i, j))));
  }
  return out;
}

PgmImage parse_pgm(std::string_view bytes) {
  std::size_t pos = 0;
  auto field = [&]() -> std::string_view {
    const std::size_t start = pos;
    while (pos < bytes.size() && bytes[pos] != ' ' && bytes[pos] != '\n') ++pos;
    if (pos == start || pos >= bytes.size()) throw DomainError("truncated PGM header");
    return bytes.substr(start, (pos++) - start);
  };
  auto number = [&](std::string_view s) {
    int v = 0;
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw DomainError("bad number in PGM header");
      v = v * 10 + (ch - '0');
    }
    return v;
  };
  if (field() != "P5") throw DomainError("not a binary PGM (P5)");
  PgmImage img;
  img.width = number(field());
  img.height = number(field());
  if (number(field()) != 255) throw DomainError("PGM maxval must be 255");
  const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
  if (bytes.size() - pos != n) throw DomainError("PGM pixel data has the wrong length");
  img.pixels.assign(bytes.begin() + static_cast<std::ptrdiff_t>(pos), bytes.end());
  return img;
}

std::vector<Region> cells_from_pgm(const PgmImage& image) {
  std::vector<Region> cells(image.pixels.size());
  for (int r = 0; r < image.height; ++r) {
    const int j = image.height - 1 - r;
    for (int i = 0; i < image.width; ++i) {
      const std::uint8_t v = image.pixels[static_cast<std::size_t>(r) * image.width + i];
      Region reg;
      if (v == 0) {
        reg = Region::Black;
      } else if (v == 128) {
        reg = Region::Gray;
      } else if (v == 255) {
        reg = Region::White;
      } else {
        throw DomainError("unexpected PGM pixel value " + std::to_string(v));
      }
      cells[static_cast<std::size_t>(j) * image.width + i] = reg;
    }
  }
  return cells;
}

std::string emit_csv(const ScanGrid& grid) {
  std::string out = "a,b,class,bound\n";
  char buf[128];
  for (int j = 0; j < grid.nb; ++j) {
    const double b = grid.b_at(j);
    for (int i = 0; i < grid.na; ++i) {
      const double a = grid.a_at(i);
      const Params p{std::min(a, b), std::max(a, b), grid.c};
      std::snprintf(buf, sizeof buf, "%.10g,%.10g,", a, b);
      out += buf;
      out += to_string(grid.at(i, j));
      out += ',';
      if (sufficient_ok(p)) {
        std::snprintf(buf, sizeof buf, "%.10g", bound_sufficient(p));
        out += buf;
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace hypgeo
