// Prints the Dirac spectrum of a flat torus model with a fractional
// holonomy parameter and checks the square against the Laplacian.

#include <iostream>

#include "spinlab/io.hpp"
#include "spinlab/torus.hpp"

int main() {
  using namespace spinlab;
  Eigen::VectorXd a(3);
  a << 0.3, 0.0, 0.0;
  const TorusModel model(3, 1, a, 3);
  std::cout << "flat model n=3 r=1 K=3 a=(0.3,0,0)\n";
  std::cout << "  D^2 - Laplacian residual: " << verify_sl_flat(model) << "\n";
  std::cout << "  harmonic kernel dimension: " << harmonic_kernel(model).dimension << "\n";
  const EigenvalueBoundReport bound = eigenvalue_bound_check(model);
  std::cout << "  smallest lambda^2: " << bound.min_lambda_sq << "\n";
  std::cout << "  spectrum: " << spectrum_to_json(model).dump(2) << "\n";
  return 0;
}
