#include "sievecast/grid.hpp"

#include <cmath>

#include "sievecast/errors.hpp"

namespace sievecast {

Grid uniform_grid(Eigen::Index m) {
  if (m < 2) throw InputError("uniform_grid: need at least 2 points");
  Grid g;
  g.points = Eigen::VectorXd::LinSpaced(m, 0.0, 1.0);
  const double h = 1.0 / static_cast<double>(m - 1);
  g.weights.resize(m);
  if (m >= 3 && m % 2 == 1) {
    // composite Simpson: h/3 * (1, 4, 2, 4, ..., 4, 1)
    g.weights.setConstant(2.0 * h / 3.0);
    for (Eigen::Index i = 1; i < m; i += 2) g.weights[i] = 4.0 * h / 3.0;
    g.weights[0] = h / 3.0;
    g.weights[m - 1] = h / 3.0;
  } else {
    g.weights.setConstant(h);
    g.weights[0] = h / 2.0;
    g.weights[m - 1] = h / 2.0;
  }
  return g;
}

Grid grid_from_points(Eigen::VectorXd points) {
  const Eigen::Index m = points.size();
  if (m < 2) throw InputError("grid_from_points: need at least 2 points");
  Grid g;
  g.weights.resize(m);
  g.weights[0] = (points[1] - points[0]) / 2.0;
  for (Eigen::Index i = 1; i + 1 < m; ++i)
    g.weights[i] = (points[i + 1] - points[i - 1]) / 2.0;
  g.weights[m - 1] = (points[m - 1] - points[m - 2]) / 2.0;
  g.points = std::move(points);
  validate_grid(g);
  return g;
}

Grid grid_for_ingested_points(Eigen::VectorXd points) {
  const Eigen::Index m = points.size();
  if (m >= 3 && m % 2 == 1) {
    const double h = (points[m - 1] - points[0]) / static_cast<double>(m - 1);
    bool uniform = true;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (std::abs(points[i] - (points[0] + h * static_cast<double>(i))) > 1e-12) {
        uniform = false;
        break;
      }
    }
    if (uniform) {
      Grid g;
      g.weights.setConstant(m, 2.0 * h / 3.0);
      for (Eigen::Index i = 1; i < m; i += 2) g.weights[i] = 4.0 * h / 3.0;
      g.weights[0] = h / 3.0;
      g.weights[m - 1] = h / 3.0;
      g.points = std::move(points);
      validate_grid(g);
      return g;
    }
  }
  return grid_from_points(std::move(points));
}

void validate_grid(const Grid& grid) {
  const Eigen::Index m = grid.points.size();
  if (m < 2) throw InputError("grid: need at least 2 points");
  if (grid.weights.size() != m) throw InputError("grid: points/weights length mismatch");
  if (grid.points[0] < -1e-15 || grid.points[m - 1] > 1.0 + 1e-15)
    throw InputError("grid: points must lie in [0, 1]");
  for (Eigen::Index i = 1; i < m; ++i)
    if (!(grid.points[i] > grid.points[i - 1]))
      throw InputError("grid: points must be strictly increasing");
  if ((grid.weights.array() < -1e-15).any())
    throw InputError("grid: weights must be nonnegative");
  const bool spans = grid.points[0] <= 1e-12 && grid.points[m - 1] >= 1.0 - 1e-12;
  if (spans && std::abs(grid.weights.sum() - 1.0) > 1e-12)
    throw InputError("grid: weights on a full [0,1] grid must sum to 1");
}

double inner_product(const Eigen::Ref<const Eigen::VectorXd>& f,
                     const Eigen::Ref<const Eigen::VectorXd>& g,
                     const Grid& grid) {
  if (f.size() != g.size() || f.size() != grid.size())
    throw LengthMismatch("inner_product: sample lengths differ");
  return (f.array() * g.array() * grid.weights.array()).sum();
}

}  // namespace sievecast
