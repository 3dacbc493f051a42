#pragma once

#include <Eigen/Core>

namespace sievecast {

/// Quadrature grid on (a subset of) [0, 1]: strictly increasing points and
/// nonnegative weights for the unit-interval measure.
struct Grid {
  Eigen::VectorXd points;
  Eigen::VectorXd weights;

  Eigen::Index size() const { return points.size(); }
};

/// Uniform grid on [0, 1] with composite-Simpson weights when m is odd
/// (m >= 3), trapezoid weights otherwise.
Grid uniform_grid(Eigen::Index m);

/// Grid over arbitrary ascending points with trapezoid weights.
Grid grid_from_points(Eigen::VectorXd points);

/// Uniform spacing and odd count get Simpson weights, anything else trapezoid.
Grid grid_for_ingested_points(Eigen::VectorXd points);

/// Throws InputError when the Grid invariants are violated.
void validate_grid(const Grid& grid);

/// Quadrature approximation of the L2 inner product of two sampled curves.
double inner_product(const Eigen::Ref<const Eigen::VectorXd>& f,
                     const Eigen::Ref<const Eigen::VectorXd>& g,
                     const Grid& grid);

}  // namespace sievecast
