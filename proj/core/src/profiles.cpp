#include "poromix/profiles.hpp"

#include <cmath>

#include "poromix/errors.hpp"

namespace poromix {

namespace {

double dist2(const Vec3& a, const Vec3& b) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

}  // namespace

int parse_field(const std::string& name, bool* velocity) {
  static const char* disp[8] = {"u1_1", "u1_2", "u1_3", "u2_1",
                                "u2_2", "u2_3", "phi1", "phi2"};
  static const char* vel[8] = {"v1_1", "v1_2", "v1_3", "v2_1",
                               "v2_2", "v2_3", "psi1", "psi2"};
  for (int k = 0; k < 8; ++k) {
    if (name == disp[k]) {
      if (velocity) *velocity = false;
      return k;
    }
    if (name == vel[k]) {
      if (velocity) *velocity = true;
      return k;
    }
  }
  throw SchemaError("unknown field '" + name + "'");
}

int parse_source_field(const std::string& name) {
  static const char* src[8] = {"f1_1", "f1_2", "f1_3", "f2_1",
                               "f2_2", "f2_3", "l1",   "l2"};
  for (int k = 0; k < 8; ++k)
    if (name == src[k]) return k;
  throw SchemaError("unknown source field '" + name + "'");
}

std::string field_name(int dof, bool velocity) {
  static const char* disp[8] = {"u1_1", "u1_2", "u1_3", "u2_1",
                                "u2_2", "u2_3", "phi1", "phi2"};
  static const char* vel[8] = {"v1_1", "v1_2", "v1_3", "v2_1",
                               "v2_2", "v2_3", "psi1", "psi2"};
  return velocity ? vel[dof] : disp[dof];
}

double TimeProfile::value(double t) const {
  switch (kind) {
    case Kind::Constant: return amplitude;
    case Kind::Gaussian: {
      const double z = (t - t0) / width;
      return amplitude * std::exp(-z * z);
    }
    case Kind::Sine: return amplitude * std::sin(omega * t + phase);
  }
  return 0.0;
}

double TimeProfile::rate(double t) const {
  switch (kind) {
    case Kind::Constant: return 0.0;
    case Kind::Gaussian: {
      const double z = (t - t0) / width;
      return amplitude * std::exp(-z * z) * (-2.0 * z / width);
    }
    case Kind::Sine: return amplitude * omega * std::cos(omega * t + phase);
  }
  return 0.0;
}

double TimeProfile::accel(double t) const {
  switch (kind) {
    case Kind::Constant: return 0.0;
    case Kind::Gaussian: {
      const double z = (t - t0) / width;
      return amplitude * std::exp(-z * z) * (4.0 * z * z - 2.0) /
             (width * width);
    }
    case Kind::Sine:
      return -amplitude * omega * omega * std::sin(omega * t + phase);
  }
  return 0.0;
}

double InitialProfile::shape(const Vec3& x) const {
  switch (kind) {
    case Kind::GaussianPulse:
      return amplitude * std::exp(-dist2(x, center) / (width * width));
    case Kind::BumpPulse: {
      // (1 - (r/w)^2)^4 on r < w: compact and C^3 at the edge.
      const double q = dist2(x, center) / (width * width);
      if (q >= 1.0) return 0.0;
      const double b = 1.0 - q;
      return amplitude * b * b * b * b;
    }
    case Kind::PlaneWave: return amplitude * std::sin(dot(k, x) + phase);
    case Kind::Rigid:
    case Kind::Zero: return 0.0;
  }
  return 0.0;
}

Vec3 InitialProfile::shape_gradient(const Vec3& x) const {
  Vec3 g{};
  switch (kind) {
    case Kind::GaussianPulse: {
      const double f = shape(x);
      for (int i = 0; i < 3; ++i)
        g[i] = -2.0 * (x[i] - center[i]) / (width * width) * f;
      break;
    }
    case Kind::BumpPulse: {
      const double q = dist2(x, center) / (width * width);
      if (q >= 1.0) break;
      const double b = 1.0 - q;
      for (int i = 0; i < 3; ++i)
        g[i] = amplitude * 4.0 * b * b * b * (-2.0 * (x[i] - center[i])) /
               (width * width);
      break;
    }
    case Kind::PlaneWave: {
      const double c = amplitude * std::cos(dot(k, x) + phase);
      for (int i = 0; i < 3; ++i) g[i] = k[i] * c;
      break;
    }
    case Kind::Rigid:
    case Kind::Zero: break;
  }
  return g;
}

double SourceProfile::shape(const Vec3& x) const {
  return amplitude * std::exp(-dist2(x, center) / (width * width));
}

double SourceProfile::value(const Vec3& x, double t) const {
  return shape(x) * time.value(t);
}

}  // namespace poromix
