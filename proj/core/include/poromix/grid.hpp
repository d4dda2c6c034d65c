#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "poromix/tensor.hpp"

namespace poromix {

/// Uniform Cartesian node grid in one or two sampled dimensions. Fields
/// are independent of the unsampled coordinates. Node (ix, iy) has flat
/// index ix + n[0] * iy.
struct Grid {
  int dim = 1;
  std::array<int, 2> n{4, 1};
  std::array<double, 2> h{1.0, 1.0};
  std::array<double, 2> origin{0.0, 0.0};

  /// Throws InvalidParameter unless dim is 1 or 2, n >= 4 and h > 0 in
  /// every sampled dimension.
  void validate() const;

  std::size_t nodes() const {
    return static_cast<std::size_t>(n[0]) * (dim == 2 ? n[1] : 1);
  }
  std::size_t cells() const {
    return static_cast<std::size_t>(n[0] - 1) * (dim == 2 ? n[1] - 1 : 1);
  }
  int nodes_per_cell() const { return dim == 2 ? 4 : 2; }

  Vec3 position(std::size_t node) const;
  std::array<int, 2> coords(std::size_t node) const;
  std::size_t node_index(int ix, int iy = 0) const {
    return static_cast<std::size_t>(ix) + static_cast<std::size_t>(n[0]) * iy;
  }

  /// Local node k of a cell, k in lexicographic order (x fastest).
  std::size_t cell_node(std::size_t cell, int k) const;

  /// Quadrature weight of a node (its share of the domain measure).
  double node_weight(std::size_t node) const;
  double cell_volume() const { return dim == 2 ? h[0] * h[1] : h[0]; }
  double min_spacing() const;
  /// Side lengths (n - 1) h.
  std::array<double, 2> extent() const;
  double volume() const;

  bool on_boundary(std::size_t node) const;

  friend bool operator==(const Grid&, const Grid&) = default;
};

/// Boundary sides, in the order used by configuration keys.
enum class Side { XMin = 0, XMax = 1, YMin = 2, YMax = 3 };
const char* side_name(Side s);
int side_count(int dim);

/// Nodes on one side, in increasing index order.
std::vector<std::size_t> side_nodes(const Grid& g, Side s);

/// Measure of the side associated with a node on it (1 in one dimension,
/// the trapezoid share of the edge in two).
double side_weight(const Grid& g, Side s, std::size_t node);

}  // namespace poromix
