#include <catch2/catch_amalgamated.hpp>

#include "spinlab/rng.hpp"
#include "spinlab/spin_group.hpp"

using namespace spinlab;

namespace {

SpinElement random_even_element(int n, int pairs, Rng& rng) {
  SpinElement g;
  g.n = n;
  for (int f = 0; f < 2 * pairs; ++f) g.factors.push_back(rng.unit_vector(n));
  return g;
}

Eigen::VectorXd basis_vec(int n, int i) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  v[i - 1] = 1.0;
  return v;
}

}  // namespace

TEST_CASE("rep_operator basics", "[spin_group]") {
  REQUIRE((rep_operator(SpinElement::identity(4)) - Eigen::MatrixXcd::Identity(4, 4)).norm() <
          1e-15);

  SpinElement g;
  g.n = 4;
  g.factors = {basis_vec(4, 1), basis_vec(4, 2)};
  const Eigen::MatrixXcd direct =
      build_generator(4, 1).dense() * build_generator(4, 2).dense();
  REQUIRE((rep_operator(g) - direct).norm() < 1e-14);

  Rng rng(31);
  for (int t = 0; t < 5; ++t) {
    const SpinElement h = random_even_element(5, 1 + static_cast<int>(rng.integer(3)), rng);
    const Eigen::MatrixXcd u = rep_operator(h);
    REQUIRE((u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).norm() < 1e-12);
  }

  SpinElement bad;
  bad.n = 3;
  bad.factors = {2.0 * basis_vec(3, 1), basis_vec(3, 2)};
  REQUIRE_THROWS_AS(rep_operator(bad), std::invalid_argument);
  bad.factors = {basis_vec(3, 1)};
  REQUIRE_THROWS_AS(rep_operator(bad), std::invalid_argument);
}

TEST_CASE("vector_rep covering map", "[spin_group]") {
  REQUIRE((vector_rep(SpinElement::identity(5)) - Eigen::MatrixXd::Identity(5, 5)).norm() <
          1e-12);

  // e_1 e_2 covers the rotation by pi in the (1,2)-plane.
  SpinElement g;
  g.n = 4;
  g.factors = {basis_vec(4, 1), basis_vec(4, 2)};
  Eigen::VectorXd diag(4);
  diag << -1, -1, 1, 1;
  REQUIRE((vector_rep(g) - diag.asDiagonal().toDenseMatrix()).norm() < 1e-12);

  // The two preimages of a rotation agree.
  REQUIRE((vector_rep(g.negated()) - vector_rep(g)).norm() < 1e-12);

  Rng rng(7);
  for (int t = 0; t < 5; ++t) {
    const int n = 5;
    const SpinElement a = random_even_element(n, 1, rng);
    const SpinElement b = random_even_element(n, 2, rng);
    const Eigen::MatrixXd ra = vector_rep(a);
    // Orthogonal with determinant +1.
    REQUIRE((ra.transpose() * ra - Eigen::MatrixXd::Identity(n, n)).norm() < 1e-11);
    REQUIRE(ra.determinant() == Catch::Approx(1.0).margin(1e-10));
    // Homomorphism.
    REQUIRE((vector_rep(a * b) - ra * vector_rep(b)).norm() < 1e-11);
  }
}

TEST_CASE("vector_rep equivariance with Clifford multiplication", "[spin_group]") {
  Rng rng(13);
  const int n = 6;
  const SpinorSpace space(n);
  for (int t = 0; t < 10; ++t) {
    const SpinElement g = random_even_element(n, 1 + static_cast<int>(rng.integer(2)), rng);
    const Eigen::MatrixXcd u = rep_operator(g);
    const Eigen::MatrixXd rot = vector_rep(g);
    const Eigen::VectorXd x = rng.unit_vector(n);
    const Eigen::VectorXcd psi = rng.complex_vector(static_cast<int>(space.dim()));
    const Eigen::VectorXcd lhs = clifford_mul_vector(rot * x, space, psi);
    const Eigen::VectorXcd rhs =
        u * clifford_mul_vector(x, space, (u.adjoint() * psi).eval());
    REQUIRE((lhs - rhs).norm() < 1e-10 * psi.norm());
  }
}

TEST_CASE("infinitesimal generator of the covering map", "[spin_group]") {
  REQUIRE(lie_generator_check(3, 1, 2) < 1e-6);
  REQUIRE(lie_generator_check(5, 2, 4) < 1e-6);
  // Central differences are second order: halving the step divides the
  // residual by about four.
  const double coarse = lie_generator_check(4, 1, 3, 1e-3);
  const double fine = lie_generator_check(4, 1, 3, 5e-4);
  REQUIRE(coarse / fine == Catch::Approx(4.0).margin(0.5));
  REQUIRE_THROWS_AS(lie_generator_check(4, 3, 1), std::invalid_argument);
}

TEST_CASE("twisted spinor space dimensions", "[spin_group]") {
  REQUIRE(TwistedSpinorSpace(5, 0).sigma_dim() == 1);
  REQUIRE(TwistedSpinorSpace(5, 1).sigma_dim() == 1);
  REQUIRE(TwistedSpinorSpace(6, 2).sigma_dim() == 2);
  REQUIRE(TwistedSpinorSpace(7, 3).sigma_dim() == 2);
  REQUIRE(TwistedSpinorSpace(8, 4).sigma_dim() == 4);
  REQUIRE(TwistedSpinorSpace(6, 2).total_dim() == 2 * 8);
}

TEST_CASE("twisted representation", "[spin_group]") {
  Rng rng(17);
  const TwistedSpinorSpace space(5, 3);

  SpinCRElement id;
  id.g = SpinElement::identity(5);
  id.h = SpinElement::identity(3);
  const Eigen::MatrixXcd id_op = twisted_rep(id, space).dense();
  REQUIRE((id_op - Eigen::MatrixXcd::Identity(id_op.rows(), id_op.cols())).norm() < 1e-14);

  SpinCRElement el;
  el.g = random_even_element(5, 1, rng);
  el.h = random_even_element(3, 1, rng);
  el.z = rng.unit_complex();
  const Eigen::MatrixXcd op = twisted_rep(el, space).dense();
  REQUIRE((op.adjoint() * op - Eigen::MatrixXcd::Identity(op.rows(), op.cols())).norm() < 1e-12);

  // (g, h, z) and (-g, -h, z) act identically.
  SpinCRElement flipped{el.g.negated(), el.h.negated(), el.z};
  REQUIRE((twisted_rep(flipped, space).dense() - op).norm() < 1e-12);

  // Composition on matching representatives.
  SpinCRElement el2;
  el2.g = random_even_element(5, 2, rng);
  el2.h = random_even_element(3, 1, rng);
  el2.z = rng.unit_complex();
  SpinCRElement product{el.g * el2.g, el.h * el2.h, el.z * el2.z};
  REQUIRE((twisted_rep(product, space).dense() -
           twisted_rep(el, space).dense() * twisted_rep(el2, space).dense())
              .norm() < 1e-11);

  // r <= 1 degenerates to z kappa_n(g), with the h sign carried through.
  const TwistedSpinorSpace thin(4, 1);
  SpinCRElement c;
  c.g = random_even_element(4, 1, rng);
  c.h = SpinElement::identity(1);
  c.z = rng.unit_complex();
  REQUIRE((twisted_rep(c, thin).dense() - c.z * rep_operator(c.g)).norm() < 1e-13);
  Eigen::VectorXd f1(1);
  f1 << 1.0;
  c.h.factors = {f1, f1};
  REQUIRE((twisted_rep(c, thin).dense() + c.z * rep_operator(c.g)).norm() < 1e-13);

  SpinCRElement mismatched{random_even_element(4, 1, rng), SpinElement::identity(3), 1.0};
  REQUIRE_THROWS_AS(twisted_rep(mismatched, space), std::invalid_argument);
}

TEST_CASE("form action on the twisted module splits across factors", "[spin_group]") {
  // (w1 (x) w2) . (psi (x) phi) = (w1 . psi) (x) (w2 . phi).
  Rng rng(23);
  const TwistedSpinorSpace space(4, 3);
  const Eigen::MatrixXcd w1 = twist_pair_operator(space, 1, 2);
  const Eigen::MatrixXcd w2 =
      build_generator(4, 1).dense() * build_generator(4, 3).dense();
  const Eigen::VectorXcd psi = rng.complex_vector(static_cast<int>(space.sigma_dim()));
  const Eigen::VectorXcd phi = rng.complex_vector(static_cast<int>(space.spin_dim()));
  const Eigen::MatrixXcd pure = psi * phi.transpose();  // rank-one twisted spinor
  const Eigen::MatrixXcd acted = (w1 * psi) * (w2 * phi).transpose();
  const Eigen::MatrixXcd via_blocks = w1 * pure * w2.transpose();
  REQUIRE((acted - via_blocks).norm() < 1e-13);
}

TEST_CASE("half spinor projector", "[spin_group]") {
  for (int r : {2, 4}) {
    const Eigen::MatrixXcd p = half_spinor_projector(r);
    REQUIRE((p * p - p).norm() < 1e-13);
    REQUIRE((p - p.adjoint()).norm() < 1e-13);
    REQUIRE(p.trace().real() == Catch::Approx(std::pow(2.0, r / 2 - 1)).margin(1e-12));
    // The image is spanned by the basis vectors whose sign pattern has an
    // even number of -1 entries.
    for (Eigen::Index idx = 0; idx < p.rows(); ++idx) {
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero(p.rows());
      v[idx] = 1.0;
      int minus = 0;
      for (Eigen::Index b = idx; b != 0; b >>= 1) minus += static_cast<int>(b & 1);
      if (minus % 2 == 0) {
        REQUIRE((p * v - v).norm() < 1e-13);
      } else {
        REQUIRE((p * v).norm() < 1e-13);
      }
    }
    // Commutes with the representation of even products.
    Rng rng(41);
    const SpinElement h = random_even_element(r, 1, rng);
    const Eigen::MatrixXcd u = rep_operator(h);
    REQUIRE((p * u - u * p).norm() < 1e-12);
  }
  REQUIRE_THROWS_AS(half_spinor_projector(3), std::invalid_argument);
  REQUIRE_THROWS_AS(half_spinor_projector(0), std::invalid_argument);
}
