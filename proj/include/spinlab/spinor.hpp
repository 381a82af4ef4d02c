#pragma once

#include <cstdint>
#include <stdexcept>

#include <Eigen/Dense>

#include "spinlab/structured_op.hpp"

namespace spinlab {

/// The complex spin module of dimension n: dim = 2^floor(n/2), with
/// dim = 1 for n = 0, 1.
struct SpinorSpace {
  int n = 0;

  explicit SpinorSpace(int n_) : n(n_) {
    if (n_ < 0) throw std::invalid_argument("SpinorSpace: n must be >= 0");
  }

  int factor_count() const { return n / 2; }
  Eigen::Index dim() const { return Eigen::Index(1) << factor_count(); }

  bool operator==(const SpinorSpace& o) const { return n == o.n; }
};

struct Spinor {
  SpinorSpace space;
  Eigen::VectorXcd coeffs;

  explicit Spinor(SpinorSpace s)
      : space(s), coeffs(Eigen::VectorXcd::Zero(s.dim())) {}

  Spinor(SpinorSpace s, Eigen::VectorXcd c) : space(s), coeffs(std::move(c)) {
    if (coeffs.size() != space.dim()) {
      throw std::invalid_argument("Spinor: coefficient length != 2^floor(n/2)");
    }
  }

  /// Basis spinor u_I for the multi-index encoded as a coefficient index
  /// (bit 0 of the sign pattern at the first Kronecker factor is the most
  /// significant bit; 0 encodes +1).
  static Spinor basis(SpinorSpace s, Eigen::Index index) {
    Spinor psi(s);
    if (index < 0 || index >= s.dim()) {
      throw std::invalid_argument("Spinor::basis: index out of range");
    }
    psi.coeffs[index] = 1.0;
    return psi;
  }

  double norm() const { return coeffs.norm(); }
};

/// Coefficient index of u_{eps_1,...,eps_k}; signs[j] = +1 or -1.
inline Eigen::Index multi_index(const std::vector<int>& signs) {
  Eigen::Index idx = 0;
  for (int s : signs) {
    if (s != 1 && s != -1) throw std::invalid_argument("multi_index: signs must be +-1");
    idx = (idx << 1) | (s == -1 ? 1 : 0);
  }
  return idx;
}

/// Hermitian product, antilinear in the second slot.
inline cplx hermitian_inner(const Spinor& a, const Spinor& b) {
  if (!(a.space == b.space)) {
    throw std::invalid_argument("hermitian_inner: spinors from different spaces");
  }
  return b.coeffs.dot(a.coeffs);
}

inline cplx hermitian_inner(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("hermitian_inner: dimension mismatch");
  }
  return b.dot(a);
}

}  // namespace spinlab
