#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace spinlab {

using cplx = std::complex<double>;

/// A scalar multiple of a Kronecker product of 2x2 complex blocks,
/// applied to coefficient vectors factor-by-factor so the dense
/// 2^k x 2^k matrix is never materialized.
///
/// All spinor coefficients in this library are expressed in the unitary
/// basis
///     u_{+1} = (1, -i)/sqrt(2),   u_{-1} = (1, i)/sqrt(2)
/// of each C^2 factor, ordered lexicographically with +1 < -1 (so the
/// multi-index (+1,...,+1) is coefficient 0 and the sign at the first
/// Kronecker factor is the most significant bit).  The generator blocks
/// below are the standard matrices
///     g1 = diag(i, -i),  g2 = [[0, i], [i, 0]],  T = [[0, -i], [i, 0]]
/// rewritten in that basis.
namespace block {

inline Eigen::Matrix2cd id() {
  return Eigen::Matrix2cd::Identity();
}

// g1 = diag(i, -i) in the standard basis.
inline Eigen::Matrix2cd g1() {
  Eigen::Matrix2cd m;
  m << cplx(0, 0), cplx(0, 1), cplx(0, 1), cplx(0, 0);
  return m;
}

// g2 = [[0, i], [i, 0]] in the standard basis.
inline Eigen::Matrix2cd g2() {
  Eigen::Matrix2cd m;
  m << cplx(0, 0), cplx(-1, 0), cplx(1, 0), cplx(0, 0);
  return m;
}

// T = [[0, -i], [i, 0]] in the standard basis; diagonal on u_{+-1}.
inline Eigen::Matrix2cd t() {
  Eigen::Matrix2cd m;
  m << cplx(-1, 0), cplx(0, 0), cplx(0, 0), cplx(1, 0);
  return m;
}

// Linear parts of the antilinear maps alpha(z1,z2) = (-conj z2, conj z1)
// and beta(z1,z2) = (conj z1, conj z2): apply entrywise conjugation in
// u-coordinates first, then these matrices.
inline Eigen::Matrix2cd alpha_linear() {
  Eigen::Matrix2cd m;
  m << cplx(0, 0), cplx(0, 1), cplx(0, -1), cplx(0, 0);
  return m;
}

inline Eigen::Matrix2cd beta_linear() {
  Eigen::Matrix2cd m;
  m << cplx(0, 0), cplx(1, 0), cplx(1, 0), cplx(0, 0);
  return m;
}

}  // namespace block

class StructuredOperator {
 public:
  StructuredOperator() : scalar_(1.0) {}

  StructuredOperator(cplx scalar, std::vector<Eigen::Matrix2cd> factors)
      : scalar_(scalar), factors_(std::move(factors)) {}

  static StructuredOperator identity(int factor_count) {
    std::vector<Eigen::Matrix2cd> f(static_cast<std::size_t>(factor_count),
                                    block::id());
    return StructuredOperator(1.0, std::move(f));
  }

  cplx scalar() const { return scalar_; }
  const std::vector<Eigen::Matrix2cd>& factors() const { return factors_; }
  int factor_count() const { return static_cast<int>(factors_.size()); }
  Eigen::Index dim() const { return Eigen::Index(1) << factors_.size(); }

  /// Apply to a coefficient vector of length 2^k.  One in-place sweep per
  /// factor, O(k 2^k) total.
  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const {
    if (v.size() != dim()) {
      throw std::invalid_argument("StructuredOperator::apply: dimension mismatch");
    }
    Eigen::VectorXcd w = v;
    const int k = factor_count();
    for (int j = 0; j < k; ++j) {
      const Eigen::Matrix2cd& f = factors_[static_cast<std::size_t>(j)];
      const Eigen::Index stride = Eigen::Index(1) << (k - 1 - j);
      for (Eigen::Index base = 0; base < w.size(); base += 2 * stride) {
        for (Eigen::Index off = 0; off < stride; ++off) {
          const cplx a = w[base + off];
          const cplx b = w[base + off + stride];
          w[base + off] = f(0, 0) * a + f(0, 1) * b;
          w[base + off + stride] = f(1, 0) * a + f(1, 1) * b;
        }
      }
    }
    return scalar_ * w;
  }

  /// Composition this * other (apply `other` first).  Factor counts must
  /// match; blocks multiply slot-wise and scalars multiply.
  StructuredOperator compose(const StructuredOperator& other) const {
    if (factor_count() != other.factor_count()) {
      throw std::invalid_argument("StructuredOperator::compose: factor count mismatch");
    }
    std::vector<Eigen::Matrix2cd> f(factors_.size());
    for (std::size_t j = 0; j < factors_.size(); ++j) {
      f[j] = factors_[j] * other.factors_[j];
    }
    return StructuredOperator(scalar_ * other.scalar_, std::move(f));
  }

  StructuredOperator scaled(cplx c) const {
    return StructuredOperator(scalar_ * c, factors_);
  }

  /// Dense matrix, for tests and small twist factors only.
  Eigen::MatrixXcd dense() const {
    const Eigen::Index d = dim();
    Eigen::MatrixXcd m(d, d);
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(d);
    for (Eigen::Index j = 0; j < d; ++j) {
      e[j] = 1.0;
      m.col(j) = apply(e);
      e[j] = 0.0;
    }
    return m;
  }

 private:
  cplx scalar_;
  std::vector<Eigen::Matrix2cd> factors_;
};

}  // namespace spinlab
