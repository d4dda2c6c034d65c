#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace poromix {

using Vec3 = std::array<double, 3>;

/// Dense 3x3 tensor, `m(i, j)` is row i, column j.
struct Mat3 {
  std::array<double, 9> v{};

  constexpr double& operator()(int i, int j) { return v[3 * i + j]; }
  constexpr double operator()(int i, int j) const { return v[3 * i + j]; }

  static constexpr Mat3 identity() {
    Mat3 m;
    m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
    return m;
  }

  constexpr Mat3 transposed() const {
    Mat3 t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t(i, j) = (*this)(j, i);
    return t;
  }

  friend bool operator==(const Mat3&, const Mat3&) = default;
};

/// Rank-4 tensor on R^3, `t(i, j, r, s)` in row-major order (i slowest).
struct Tensor4 {
  std::array<double, 81> v{};

  constexpr double& operator()(int i, int j, int r, int s) {
    return v[27 * i + 9 * j + 3 * r + s];
  }
  constexpr double operator()(int i, int j, int r, int s) const {
    return v[27 * i + 9 * j + 3 * r + s];
  }

  friend bool operator==(const Tensor4&, const Tensor4&) = default;
};

constexpr double kronecker(int i, int j) { return i == j ? 1.0 : 0.0; }

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

/// Sum of squares of all components.
inline double frobenius2(const Mat3& m) {
  double s = 0.0;
  for (double x : m.v) s += x * x;
  return s;
}

}  // namespace poromix
