#include "poromix/grid.hpp"

#include <algorithm>

#include "poromix/errors.hpp"

namespace poromix {

void Grid::validate() const {
  if (dim != 1 && dim != 2) throw InvalidParameter("grid.dim must be 1 or 2");
  for (int d = 0; d < dim; ++d) {
    if (n[d] < 4) throw InvalidParameter("grid.n must be at least 4");
    if (!(h[d] > 0)) throw InvalidParameter("grid.h must be positive");
  }
}

Vec3 Grid::position(std::size_t node) const {
  auto c = coords(node);
  Vec3 x{origin[0] + c[0] * h[0], 0.0, 0.0};
  if (dim == 2) x[1] = origin[1] + c[1] * h[1];
  return x;
}

std::array<int, 2> Grid::coords(std::size_t node) const {
  return {static_cast<int>(node % n[0]), static_cast<int>(node / n[0])};
}

std::size_t Grid::cell_node(std::size_t cell, int k) const {
  const std::size_t cx = cell % (n[0] - 1);
  const std::size_t cy = cell / (n[0] - 1);
  return node_index(static_cast<int>(cx) + (k & 1),
                    static_cast<int>(cy) + (k >> 1));
}

double Grid::node_weight(std::size_t node) const {
  auto c = coords(node);
  double w = 1.0;
  for (int d = 0; d < dim; ++d) {
    w *= h[d];
    if (c[d] == 0 || c[d] == n[d] - 1) w *= 0.5;
  }
  return w;
}

double Grid::min_spacing() const {
  return dim == 2 ? std::min(h[0], h[1]) : h[0];
}

std::array<double, 2> Grid::extent() const {
  return {(n[0] - 1) * h[0], dim == 2 ? (n[1] - 1) * h[1] : 0.0};
}

double Grid::volume() const {
  auto e = extent();
  return dim == 2 ? e[0] * e[1] : e[0];
}

bool Grid::on_boundary(std::size_t node) const {
  auto c = coords(node);
  for (int d = 0; d < dim; ++d)
    if (c[d] == 0 || c[d] == n[d] - 1) return true;
  return false;
}

const char* side_name(Side s) {
  switch (s) {
    case Side::XMin: return "x_min";
    case Side::XMax: return "x_max";
    case Side::YMin: return "y_min";
    case Side::YMax: return "y_max";
  }
  return "?";
}

int side_count(int dim) { return 2 * dim; }

std::vector<std::size_t> side_nodes(const Grid& g, Side s) {
  std::vector<std::size_t> out;
  const int ny = g.dim == 2 ? g.n[1] : 1;
  switch (s) {
    case Side::XMin:
    case Side::XMax: {
      const int ix = s == Side::XMin ? 0 : g.n[0] - 1;
      for (int iy = 0; iy < ny; ++iy) out.push_back(g.node_index(ix, iy));
      break;
    }
    case Side::YMin:
    case Side::YMax: {
      if (g.dim != 2) throw InvalidParameter("y sides need a 2D grid");
      const int iy = s == Side::YMin ? 0 : g.n[1] - 1;
      for (int ix = 0; ix < g.n[0]; ++ix) out.push_back(g.node_index(ix, iy));
      break;
    }
  }
  return out;
}

double side_weight(const Grid& g, Side s, std::size_t node) {
  if (g.dim == 1) return 1.0;
  auto c = g.coords(node);
  const int along = (s == Side::XMin || s == Side::XMax) ? 1 : 0;
  double w = g.h[along];
  if (c[along] == 0 || c[along] == g.n[along] - 1) w *= 0.5;
  return w;
}

}  // namespace poromix
