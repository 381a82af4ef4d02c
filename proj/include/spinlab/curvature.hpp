#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "spinlab/forms.hpp"
#include "spinlab/partially_pure.hpp"
#include "spinlab/rng.hpp"
#include "spinlab/twisted_spinor.hpp"

namespace spinlab {

/// Rank-4 array R_ijkl with the full algebraic curvature symmetries.
class AlgebraicCurvature {
 public:
  explicit AlgebraicCurvature(int n)
      : n_(n), data_(static_cast<std::size_t>(n) * n * n * n, 0.0) {
    if (n < 2) throw std::invalid_argument("AlgebraicCurvature: n must be >= 2");
  }

  int n() const { return n_; }

  double& at(int i, int j, int k, int l) { return data_[flat(i, j, k, l)]; }
  double at(int i, int j, int k, int l) const { return data_[flat(i, j, k, l)]; }

  double antisymmetry_defect() const {
    double d = 0.0;
    for_each([&](int i, int j, int k, int l, double v) {
      d = std::max(d, std::abs(v + at(j, i, k, l)));
      d = std::max(d, std::abs(v + at(i, j, l, k)));
    });
    return d;
  }

  double pair_symmetry_defect() const {
    double d = 0.0;
    for_each([&](int i, int j, int k, int l, double v) {
      d = std::max(d, std::abs(v - at(k, l, i, j)));
    });
    return d;
  }

  double bianchi_defect() const {
    double d = 0.0;
    for_each([&](int i, int j, int k, int l, double v) {
      d = std::max(d, std::abs(v + at(i, k, l, j) + at(i, l, j, k)));
    });
    return d;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k)
          for (int l = 0; l < n_; ++l) f(i, j, k, l, at(i, j, k, l));
  }

  /// Omega_ij(X, Y) = <R(X, Y) e_i, e_j> as a skew n x n array in (i, j).
  /// The array stores the sign convention in which Ric_ij = sum_k R_kikj
  /// is positive on round spheres; the curvature operator pairs with the
  /// opposite sign, <R(e_a, e_b) e_i, e_j> = -R_abij.
  SkewForm omega(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    SkewForm w = SkewForm::Zero(n_, n_);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        double v = 0.0;
        for (int a = 0; a < n_; ++a) {
          if (x[a] == 0.0) continue;
          for (int b = 0; b < n_; ++b) {
            if (y[b] == 0.0) continue;
            v -= x[a] * y[b] * at(a, b, i, j);
          }
        }
        w(i, j) = v;
      }
    }
    return w;
  }

 private:
  std::size_t flat(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l;
  }

  int n_;
  std::vector<double> data_;
};

/// Curvature data of the auxiliary SO(r) and U(1) connections: one skew
/// 2-form Theta_kl per 1 <= k < l <= r, plus dA.
struct AuxCurvature {
  int n = 0;
  int r = 0;
  std::vector<SkewForm> theta;  // ordered (1,2), (1,3), ..., (r-1,r)
  SkewForm dA;

  static AuxCurvature zero(int n, int r) {
    AuxCurvature aux;
    aux.n = n;
    aux.r = r;
    aux.theta.assign(static_cast<std::size_t>(r * (r - 1) / 2), SkewForm::Zero(n, n));
    aux.dA = SkewForm::Zero(n, n);
    return aux;
  }

  static int pair_index(int k, int l, int r) {
    if (!(1 <= k && k < l && l <= r)) throw std::invalid_argument("AuxCurvature: bad pair");
    int idx = 0;
    for (int a = 1; a <= r; ++a) {
      for (int b = a + 1; b <= r; ++b) {
        if (a == k && b == l) return idx;
        ++idx;
      }
    }
    return idx;
  }

  const SkewForm& theta_kl(int k, int l) const {
    return theta[static_cast<std::size_t>(pair_index(k, l, r))];
  }
};

/// Sums of symmetric-square products h (.) h: these satisfy antisymmetry,
/// pair symmetry and the first Bianchi identity term by term.
inline AlgebraicCurvature random_curvature(int n, int count, Rng& rng) {
  if (n < 2 || count < 1) throw std::invalid_argument("random_curvature: bad parameters");
  AlgebraicCurvature rc(n);
  for (int c = 0; c < count; ++c) {
    Eigen::MatrixXd h(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        const double v = rng.uniform(-1.0, 1.0);
        h(i, j) = v;
        h(j, i) = v;
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l)
            rc.at(i, j, k, l) += h(i, k) * h(j, l) - h(i, l) * h(j, k);
  }
  return rc;
}

inline AlgebraicCurvature random_curvature(int n, int count, std::uint64_t seed) {
  Rng rng(seed);
  return random_curvature(n, count, rng);
}

/// Constant-curvature tensor R_ijkl = delta_ik delta_jl - delta_il delta_jk.
inline AlgebraicCurvature constant_curvature(int n) {
  AlgebraicCurvature rc(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      rc.at(i, j, i, j) += 1.0;
      rc.at(i, j, j, i) -= 1.0;
    }
  return rc;
}

inline Eigen::MatrixXd ricci(const AlgebraicCurvature& rc) {
  const int n = rc.n();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double v = 0.0;
      for (int k = 0; k < n; ++k) v += rc.at(k, i, k, j);
      out(i, j) = v;
    }
  return out;
}

inline double scalar_curvature(const AlgebraicCurvature& rc) { return ricci(rc).trace(); }

inline AuxCurvature random_aux(int n, int r, Rng& rng) {
  AuxCurvature aux = AuxCurvature::zero(n, r);
  auto fill = [&](SkewForm& w) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const double v = rng.uniform(-1.0, 1.0);
        w(i, j) = v;
        w(j, i) = -v;
      }
  };
  for (auto& th : aux.theta) fill(th);
  fill(aux.dA);
  return aux;
}

/// Spinorial curvature R^{theta,A}(X, Y) phi = (1/2) sum_{i<j} Omega_ij(X,Y)
/// e_i e_j . phi + (1/2) sum_{k<l} Theta_kl(X,Y) f_k f_l . phi
/// + (i/2) dA(X,Y) phi.
inline TwistedSpinor twisted_curvature_apply(const AlgebraicCurvature& rc,
                                             const AuxCurvature& aux,
                                             const Eigen::VectorXd& x,
                                             const Eigen::VectorXd& y,
                                             const TwistedSpinor& phi) {
  const int n = phi.space.n;
  const int r = phi.space.r;
  if (rc.n() != n || aux.n != n || aux.r != r || x.size() != n || y.size() != n) {
    throw std::invalid_argument("twisted_curvature_apply: dimension mismatch");
  }
  TwistedSpinor out = spin_form_apply(rc.omega(x, y), phi) * cplx(0.5, 0.0);
  for (int k = 1; k <= r; ++k) {
    for (int l = k + 1; l <= r; ++l) {
      const double c = x.transpose() * aux.theta_kl(k, l) * y;
      if (c != 0.0) out = out + twist_pair_apply(k, l, phi) * cplx(0.5 * c, 0.0);
    }
  }
  const double da = x.transpose() * aux.dA * y;
  out = out + phi * cplx(0.0, 0.5 * da);
  return out;
}

/// Residual of sum_i e_i . R^{theta,A}(X, e_i) phi = -1/2 Ric(X) . phi
/// + 1/2 sum_{k<l} (X -| Theta_kl) . f_k f_l . phi + (i/2) (X -| dA) . phi.
inline double verify_ricci_identity(const AlgebraicCurvature& rc, const AuxCurvature& aux,
                                    const TwistedSpinor& phi, const Eigen::VectorXd& x) {
  const int n = phi.space.n;
  TwistedSpinor lhs(phi.space);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd ei = Eigen::VectorXd::Zero(n);
    ei[i] = 1.0;
    lhs = lhs + spin_vector_apply(ei, twisted_curvature_apply(rc, aux, x, ei, phi));
  }
  const Eigen::VectorXd ric_x = ricci(rc) * x;
  TwistedSpinor rhs = spin_vector_apply(ric_x, phi) * cplx(-0.5, 0.0);
  for (int k = 1; k <= aux.r; ++k) {
    for (int l = k + 1; l <= aux.r; ++l) {
      const Eigen::VectorXd contraction = aux.theta_kl(k, l).transpose() * x;
      rhs = rhs + spin_vector_apply(contraction, twist_pair_apply(k, l, phi)) * cplx(0.5, 0.0);
    }
  }
  const Eigen::VectorXd da_x = aux.dA.transpose() * x;
  rhs = rhs + spin_vector_apply(da_x, phi) * cplx(0.0, 0.5);
  return (lhs - rhs).coeffs.cwiseAbs().maxCoeff();
}

/// Residual of sum_{i,j} e_i e_j . R^{theta,A}(e_i, e_j) phi = (R/2) phi
/// + sum_{k<l} Theta_kl . f_k f_l . phi + i dA . phi.
inline double verify_scalar_identity(const AlgebraicCurvature& rc, const AuxCurvature& aux,
                                     const TwistedSpinor& phi) {
  const int n = phi.space.n;
  TwistedSpinor lhs(phi.space);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd ei = Eigen::VectorXd::Zero(n);
    ei[i] = 1.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      Eigen::VectorXd ej = Eigen::VectorXd::Zero(n);
      ej[j] = 1.0;
      lhs = lhs + spin_vector_apply(
                      ei, spin_vector_apply(ej, twisted_curvature_apply(rc, aux, ei, ej, phi)));
    }
  }
  TwistedSpinor rhs = phi * cplx(0.5 * scalar_curvature(rc), 0.0);
  for (int k = 1; k <= aux.r; ++k) {
    for (int l = k + 1; l <= aux.r; ++l) {
      rhs = rhs + spin_form_apply(aux.theta_kl(k, l), twist_pair_apply(k, l, phi));
    }
  }
  rhs = rhs + spin_form_apply(aux.dA, phi) * cplx(0.0, 1.0);
  return (lhs - rhs).coeffs.cwiseAbs().maxCoeff();
}

struct ThetaPairingResult {
  double residual = 0.0;        // |pairing - <Theta, eta^phi>_0|
  double imaginary_part = 0.0;  // |Im <Theta~ . phi, phi>|
};

/// <Theta~ . phi, phi> = sum_{k<l} sum_{i<j} Theta_kl(e_i, e_j)
/// eta_kl^phi(e_i, e_j); the left side is computed through the operator
/// route and must also be real.
inline ThetaPairingResult theta_pairing_check(const AuxCurvature& aux, const TwistedSpinor& phi) {
  if (phi.space.r < 2) throw std::invalid_argument("theta_pairing_check: r must be >= 2");
  TwistedSpinor op(phi.space);
  for (int k = 1; k <= aux.r; ++k) {
    for (int l = k + 1; l <= aux.r; ++l) {
      op = op + spin_form_apply(aux.theta_kl(k, l), twist_pair_apply(k, l, phi));
    }
  }
  const cplx lhs = twisted_inner(op, phi);
  double rhs = 0.0;
  for (int k = 1; k <= aux.r; ++k) {
    for (int l = k + 1; l <= aux.r; ++l) {
      const SkewForm eta = eta_form(phi, k, l);
      const SkewForm& th = aux.theta_kl(k, l);
      for (int i = 0; i < aux.n; ++i)
        for (int j = i + 1; j < aux.n; ++j) rhs += th(i, j) * eta(i, j);
    }
  }
  ThetaPairingResult out;
  out.residual = std::abs(lhs.real() - rhs);
  out.imaginary_part = std::abs(lhs.imag());
  return out;
}

}  // namespace spinlab
