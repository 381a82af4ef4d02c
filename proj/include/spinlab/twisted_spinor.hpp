#pragma once

#include <stdexcept>

#include <Eigen/Dense>

#include "spinlab/clifford.hpp"
#include "spinlab/spin_group.hpp"

namespace spinlab {

/// Element of Sigma_r (x) Delta_n.  Coefficients are stored as a
/// sigma_dim x spin_dim complex matrix: row = twist index (basis order of
/// TwistedSpinorSpace::twist_basis_indices), column = Delta_n index.
struct TwistedSpinor {
  TwistedSpinorSpace space;
  Eigen::MatrixXcd coeffs;

  explicit TwistedSpinor(TwistedSpinorSpace s)
      : space(s), coeffs(Eigen::MatrixXcd::Zero(s.sigma_dim(), s.spin_dim())) {}

  TwistedSpinor(TwistedSpinorSpace s, Eigen::MatrixXcd c)
      : space(s), coeffs(std::move(c)) {
    if (coeffs.rows() != space.sigma_dim() || coeffs.cols() != space.spin_dim()) {
      throw std::invalid_argument("TwistedSpinor: coefficient shape mismatch");
    }
  }

  double norm() const { return coeffs.norm(); }

  TwistedSpinor operator+(const TwistedSpinor& o) const {
    require_same_space(o);
    return TwistedSpinor(space, coeffs + o.coeffs);
  }

  TwistedSpinor operator-(const TwistedSpinor& o) const {
    require_same_space(o);
    return TwistedSpinor(space, coeffs - o.coeffs);
  }

  TwistedSpinor operator*(cplx c) const { return TwistedSpinor(space, c * coeffs); }

  void require_same_space(const TwistedSpinor& o) const {
    if (!(space == o.space)) {
      throw std::invalid_argument("TwistedSpinor: space mismatch");
    }
  }
};

inline TwistedSpinor operator*(cplx c, const TwistedSpinor& phi) { return phi * c; }

/// Hermitian product, antilinear in the second slot.
inline cplx twisted_inner(const TwistedSpinor& a, const TwistedSpinor& b) {
  a.require_same_space(b);
  return (b.coeffs.conjugate().cwiseProduct(a.coeffs)).sum();
}

/// Clifford multiplication by a real tangent vector on the Delta_n factor.
inline TwistedSpinor spin_vector_apply(const Eigen::VectorXd& x, const TwistedSpinor& phi) {
  const SpinorSpace sn(phi.space.n);
  TwistedSpinor out(phi.space);
  for (Eigen::Index row = 0; row < phi.coeffs.rows(); ++row) {
    out.coeffs.row(row) =
        clifford_mul_vector(x, sn, phi.coeffs.row(row).transpose()).transpose();
  }
  return out;
}

inline TwistedSpinor spin_cvector_apply(const Eigen::VectorXcd& z, const TwistedSpinor& phi) {
  const SpinorSpace sn(phi.space.n);
  TwistedSpinor out(phi.space);
  for (Eigen::Index row = 0; row < phi.coeffs.rows(); ++row) {
    out.coeffs.row(row) =
        clifford_mul_cvector(z, sn, phi.coeffs.row(row).transpose()).transpose();
  }
  return out;
}

/// Form action on the Delta_n factor.
inline TwistedSpinor spin_form_apply(const SkewForm& w, const TwistedSpinor& phi) {
  const SpinorSpace sn(phi.space.n);
  TwistedSpinor out(phi.space);
  for (Eigen::Index row = 0; row < phi.coeffs.rows(); ++row) {
    out.coeffs.row(row) =
        clifford_mul_form(w, sn, phi.coeffs.row(row).transpose()).transpose();
  }
  return out;
}

inline TwistedSpinor spin_form_apply(const AntisymmetricForm& w, const TwistedSpinor& phi) {
  const SpinorSpace sn(phi.space.n);
  TwistedSpinor out(phi.space);
  for (Eigen::Index row = 0; row < phi.coeffs.rows(); ++row) {
    out.coeffs.row(row) =
        clifford_mul_form(w, sn, phi.coeffs.row(row).transpose()).transpose();
  }
  return out;
}

inline TwistedSpinor spin_structured_apply(const StructuredOperator& op,
                                           const TwistedSpinor& phi) {
  TwistedSpinor out(phi.space);
  for (Eigen::Index row = 0; row < phi.coeffs.rows(); ++row) {
    out.coeffs.row(row) = op.apply(phi.coeffs.row(row).transpose()).transpose();
  }
  return out;
}

/// Action of a sigma_dim x sigma_dim matrix on the twist factor.
inline TwistedSpinor twist_apply(const Eigen::MatrixXcd& m, const TwistedSpinor& phi) {
  if (m.rows() != phi.coeffs.rows() || m.cols() != phi.coeffs.rows()) {
    throw std::invalid_argument("twist_apply: twist block shape mismatch");
  }
  return TwistedSpinor(phi.space, m * phi.coeffs);
}

/// kappa_{r*}(f_k f_l) on the twist factor of phi.
inline TwistedSpinor twist_pair_apply(int k, int l, const TwistedSpinor& phi) {
  return twist_apply(twist_pair_operator(phi.space, k, l), phi);
}

inline TwistedSpinor twisted_op_apply(const TwistedOperator& op, const TwistedSpinor& phi) {
  return TwistedSpinor(phi.space, op.apply(phi.coeffs));
}

}  // namespace spinlab
