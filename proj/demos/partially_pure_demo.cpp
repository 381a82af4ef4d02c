// Builds the standard partially pure spinor for a few (m, r) pairs,
// verifies the defining conditions, and prints the recovered CR frame.

#include <iostream>

#include "spinlab/io.hpp"
#include "spinlab/partially_pure.hpp"

int main() {
  using namespace spinlab;
  for (const auto& [m, r] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {2, 3}}) {
    const int n = 2 * m + r;
    const TwistedSpinor phi = canonical_spinor(m, r);
    const PurityReport purity = is_partially_pure(phi, 1e-12);
    std::cout << "phi_0 on R^" << n << " with twist rank " << r << ":\n";
    std::cout << "  purity report: " << to_json(purity).dump() << "\n";

    const CRFrame frame = extract_cr(phi);
    std::cout << "  CR distribution has rank " << frame.V.cols() << ", complement rank "
              << frame.complement.cols() << "\n";
    std::cout << "  J acting on the distribution (ambient coordinates):\n"
              << frame.J_ambient << "\n";
    if (r >= 2) {
      std::cout << "  eta_12 form:\n" << eta_form(phi, 1, 2) << "\n";
    }
    if (r == 1) {
      std::cout << "  xi vector: " << xi_vector(phi).transpose() << "\n";
    }
    std::cout << "\n";
  }
  return 0;
}
