#pragma once

#include <Eigen/Core>

#include "sievecast/grid.hpp"

namespace sievecast {

enum class BasisFamily { legendre, fourier, daubechies };

/// Supplement-style periodized wavelet layouts: `mixed` is the coarse scaling
/// function plus detail levels, `father` is a single scaling level.
enum class WaveletForm { mixed, father };

struct BasisSpec {
  BasisFamily family = BasisFamily::legendre;
  Eigen::Index count = 1;
  int wavelet_order = 9;  ///< N of D-N (daubechies only)
  WaveletForm wavelet_form = WaveletForm::father;
  int cascade_depth = 12;  ///< dyadic refinement level for scaling samples
  /// Construction guard on the quadrature Gram defect; <= 0 selects the
  /// family default (1e-3).
  double gram_tolerance = 0.0;
};

/// Orthonormal family on [0, 1] evaluated on a quadrature grid. Immutable
/// after construction; safe to share read-only across threads.
struct BasisSet {
  BasisSpec spec;
  Grid grid;
  Eigen::MatrixXd values;  ///< count x m, row k holds alpha_k(u_j)
  double gram_defect = 0.0;
};

/// Normalized Legendre value alpha_k(u): 1 for k = 0, sqrt(2k+1) P_k(2u-1)
/// otherwise, with P_k from the three-term recurrence.
double legendre_eval(int k, double u);

/// Fourier row k: 1, sqrt(2) cos(2 pi u), sqrt(2) sin(2 pi u), sqrt(2) cos(4 pi u), ...
double fourier_eval(Eigen::Index k, double u);

/// Scaling (low-pass) filter of the Daubechies D-N family, 2N taps summing to
/// sqrt(2). Orders 2 and 9 are provided.
Eigen::VectorXd daubechies_filter(int order);

/// Scaling-function samples phi(j * 2^-depth), j = 0 .. (2N-1) * 2^depth,
/// produced by the cascade algorithm (eigenvector at the integers, then
/// dyadic refinement through the two-scale relation).
Eigen::VectorXd cascade_scaling_samples(const Eigen::Ref<const Eigen::VectorXd>& filter,
                                        int depth);

/// Builds the family on the grid and computes the quadrature Gram defect.
/// Throws GramDefect when the defect exceeds the guard tolerance.
BasisSet build_basis(const BasisSpec& spec, const Grid& grid);

/// alpha_k(x) at an arbitrary point: analytic for Legendre/Fourier, linear
/// interpolation of the tabulated row for wavelets.
double basis_eval(const BasisSet& basis, Eigen::Index k, double x);

/// V diag(w) V^T for the stored values; the defect is ||G - I||_max.
Eigen::MatrixXd gram_matrix(const BasisSet& basis);

}  // namespace sievecast
