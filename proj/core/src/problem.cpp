#include "poromix/problem.hpp"

#include <cmath>

#include "poromix/errors.hpp"

namespace poromix {

double BoundaryCondition::patch(const Vec3& x) const {
  if (!(width > 0)) return 1.0;
  double r2 = 0.0;
  for (int i = 0; i < 3; ++i) r2 += (x[i] - center[i]) * (x[i] - center[i]);
  return std::exp(-r2 / (width * width));
}

bool BoundarySpec::displacement_pinned(int dim) const {
  for (int s = 0; s < side_count(dim); ++s)
    if (sides[s][0].pinned()) return true;
  return false;
}

bool BoundarySpec::homogeneous(int dim) const {
  for (int s = 0; s < side_count(dim); ++s)
    for (const auto& bc : sides[s]) {
      if (bc.kind == BoundaryCondition::Kind::DirichletZero ||
          bc.kind == BoundaryCondition::Kind::TractionFree)
        continue;
      for (double v : bc.values)
        if (v != 0.0) return false;
    }
  return true;
}

void ProblemSpec::validate() const {
  grid.validate();
  if (!(T >= 0)) throw InvalidParameter("T must be non-negative");
  if (!(cfl > 0 && cfl <= 1)) throw InvalidParameter("cfl must lie in (0, 1]");
  if (!(lambda > 0)) throw InvalidParameter("lambda must be positive");
  if (record.energy_every == 0)
    throw InvalidParameter("record.energy_every must be positive");
  for (int s = 0; s < 4; ++s)
    for (int f = 0; f < 2; ++f) {
      const auto& bc = boundary.sides[s][f];
      if (s >= side_count(grid.dim)) {
        if (bc.kind != BoundaryCondition::Kind::TractionFree)
          throw SchemaError(std::string("side ") +
                            side_name(static_cast<Side>(s)) +
                            " does not exist on a 1D grid");
        continue;
      }
      if (bc.kind == BoundaryCondition::Kind::PrescribedDisplacement ||
          bc.kind == BoundaryCondition::Kind::PrescribedTraction) {
        const std::size_t want = f == 0 ? 6 : 2;
        if (bc.values.size() != want)
          throw SchemaError(std::string("boundary ") +
                            side_name(static_cast<Side>(s)) +
                            (f == 0 ? ".u" : ".phi") + " needs " +
                            std::to_string(want) + " values");
      }
    }
  for (const auto& p : initial)
    if ((p.kind == InitialProfile::Kind::GaussianPulse ||
         p.kind == InitialProfile::Kind::BumpPulse) &&
        !(p.width > 0))
      throw InvalidParameter("pulse width must be positive");
  for (const auto& s : sources)
    if (!(s.width > 0)) throw InvalidParameter("source width must be positive");
}

}  // namespace poromix
