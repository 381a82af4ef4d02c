#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "spinlab/clifford.hpp"
#include "spinlab/spinor.hpp"

namespace spinlab {

constexpr double kUnitFactorTol = 1e-12;

/// An element of Spin(n) as an even-length product of unit vectors.
struct SpinElement {
  int n = 0;
  std::vector<Eigen::VectorXd> factors;

  static SpinElement identity(int n) {
    SpinElement g;
    g.n = n;
    return g;
  }

  /// -g, realized by prepending the pair (e_1, e_1).  Needs n >= 1.
  SpinElement negated() const {
    if (n < 1) throw std::invalid_argument("SpinElement::negated: needs n >= 1");
    SpinElement g;
    g.n = n;
    Eigen::VectorXd e1 = Eigen::VectorXd::Zero(n);
    e1[0] = 1.0;
    g.factors.push_back(e1);
    g.factors.push_back(e1);
    g.factors.insert(g.factors.end(), factors.begin(), factors.end());
    return g;
  }

  SpinElement operator*(const SpinElement& other) const {
    if (n != other.n) throw std::invalid_argument("SpinElement: dimension mismatch");
    SpinElement g = *this;
    g.factors.insert(g.factors.end(), other.factors.begin(), other.factors.end());
    return g;
  }

  void validate() const {
    if (factors.size() % 2 != 0) {
      throw std::invalid_argument("SpinElement: factor count must be even");
    }
    for (const auto& x : factors) {
      if (x.size() != n) throw std::invalid_argument("SpinElement: factor length != n");
      if (std::abs(x.norm() - 1.0) > kUnitFactorTol) {
        throw std::invalid_argument("SpinElement: non-unit factor");
      }
    }
  }
};

/// kappa_n(g) as a dense unitary on Delta_n.
inline Eigen::MatrixXcd rep_operator(const SpinElement& g) {
  g.validate();
  const SpinorSpace space(g.n);
  const Eigen::Index d = space.dim();
  // Walk the factors from the right so the result is kappa(x_1)...kappa(x_2l).
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d, d);
  for (auto it = g.factors.rbegin(); it != g.factors.rend(); ++it) {
    for (Eigen::Index c = 0; c < d; ++c) {
      m.col(c) = clifford_mul_vector(*it, space, m.col(c));
    }
  }
  return m;
}

/// The covering map lambda_n: matrix of x -> g x g^{-1} in the generator
/// basis, extracted through the trace pairing tr(kappa(e_i) kappa(e_j))
/// = -delta_ij 2^{floor(n/2)}.
inline Eigen::MatrixXd vector_rep(const SpinElement& g, double extraction_tol = 1e-9) {
  const SpinorSpace space(g.n);
  const Eigen::Index d = space.dim();
  const Eigen::MatrixXcd u = rep_operator(g);
  const Eigen::MatrixXcd uinv = u.adjoint();
  Eigen::MatrixXd m(g.n, g.n);
  for (int j = 1; j <= g.n; ++j) {
    const Eigen::MatrixXcd w = u * build_generator(g.n, j).dense() * uinv;
    Eigen::MatrixXcd recon = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i <= g.n; ++i) {
      const Eigen::MatrixXcd ki = build_generator(g.n, i).dense();
      const cplx c = -(ki * w).trace() / double(d);
      if (std::abs(c.imag()) > extraction_tol) {
        throw std::runtime_error("vector_rep: non-real extraction coefficient");
      }
      m(i - 1, j - 1) = c.real();
      recon += c.real() * ki;
    }
    if ((w - recon).norm() > extraction_tol * double(d)) {
      throw std::runtime_error("vector_rep: conjugated generator left span{kappa(e_i)}");
    }
  }
  return m;
}

/// exp(t e_i e_j) in Spin(n) as the two-vector product e_i (-cos t e_i + sin t e_j).
inline SpinElement rotation_element(int n, int i, int j, double t) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) {
    throw std::invalid_argument("rotation_element: bad plane");
  }
  SpinElement g;
  g.n = n;
  Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
  a[i - 1] = 1.0;
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  b[i - 1] = -std::cos(t);
  b[j - 1] = std::sin(t);
  g.factors.push_back(a);
  g.factors.push_back(b);
  return g;
}

inline Eigen::MatrixXd so_generator(int n, int i, int j) {
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
  e(j - 1, i - 1) = 1.0;
  e(i - 1, j - 1) = -1.0;
  return e;
}

/// || d/dt|_0 lambda_n(exp(t e_i e_j)) - 2 E_ij || by central differences.
inline double lie_generator_check(int n, int i, int j, double step = 1e-4) {
  if (!(i < j)) throw std::invalid_argument("lie_generator_check: need i < j");
  const Eigen::MatrixXd plus = vector_rep(rotation_element(n, i, j, step));
  const Eigen::MatrixXd minus = vector_rep(rotation_element(n, i, j, -step));
  const Eigen::MatrixXd deriv = (plus - minus) / (2.0 * step);
  return (deriv - 2.0 * so_generator(n, i, j)).norm();
}

/// Sigma_r (+ Delta_n) bookkeeping.  The twist factor is the full spin
/// module Delta_r for r >= 2 (sigma_dim = 2^{floor(r/2)}) and C for
/// r <= 1.  Restricting the twist to a half-spinor module collapses the
/// pair operators kappa_{r*}(f_k f_l) to scalars for r = 2 (the U(1)
/// charge i) and the quartic f_1 f_2 f_3 f_4 to a scalar for r = 4, which
/// makes the partial-purity pairing conditions unsatisfiable there; the
/// half-spinor split of Delta_r stays available through
/// half_spinor_projector.
struct TwistedSpinorSpace {
  int n = 0;
  int r = 0;

  TwistedSpinorSpace(int n_, int r_) : n(n_), r(r_) {
    if (n_ < 0 || r_ < 0) throw std::invalid_argument("TwistedSpinorSpace: bad dims");
  }

  Eigen::Index sigma_dim() const {
    if (r <= 1) return 1;
    return Eigen::Index(1) << (r / 2);
  }

  Eigen::Index spin_dim() const { return SpinorSpace(n).dim(); }
  Eigen::Index total_dim() const { return sigma_dim() * spin_dim(); }

  /// Delta_r coefficient indices of the twist basis, ascending.
  std::vector<Eigen::Index> twist_basis_indices() const {
    std::vector<Eigen::Index> out;
    for (Eigen::Index idx = 0; idx < sigma_dim(); ++idx) out.push_back(idx);
    return out;
  }

  bool operator==(const TwistedSpinorSpace& o) const { return n == o.n && r == o.r; }
};

/// Complex volume element convention for even r, frozen so that
/// v_{+1,...,+1} spans (part of) the +1 eigenspace:
///   omega_C = (-i)^{r/2} kappa(f_1) ... kappa(f_r).
inline cplx volume_phase(int r) {
  if (r < 2 || r % 2 != 0) throw std::invalid_argument("volume_phase: even r >= 2 only");
  cplx c(1, 0);
  for (int t = 0; t < r / 2; ++t) c *= cplx(0, -1);
  return c;
}

/// Orthogonal projector onto Delta_r^+ inside Delta_r, r even.
inline Eigen::MatrixXcd half_spinor_projector(int r) {
  if (r < 2 || r % 2 != 0) {
    throw std::invalid_argument("half_spinor_projector: even r >= 2 only");
  }
  const SpinorSpace sr(r);
  Eigen::MatrixXcd vol = Eigen::MatrixXcd::Identity(sr.dim(), sr.dim());
  for (int i = r; i >= 1; --i) {
    vol = build_generator(r, i).dense() * vol;
  }
  vol = volume_phase(r) * vol;
  return 0.5 * (Eigen::MatrixXcd::Identity(sr.dim(), sr.dim()) + vol);
}

/// kappa_{r*}(f_k f_l) acting on the twist factor (the plain Clifford
/// product kappa_r(f_k) kappa_r(f_l)).
inline Eigen::MatrixXcd twist_pair_operator(const TwistedSpinorSpace& space, int k, int l) {
  if (space.r < 2) throw std::invalid_argument("twist_pair_operator: r must be >= 2");
  if (k < 1 || l < 1 || k > space.r || l > space.r || k == l) {
    throw std::invalid_argument("twist_pair_operator: bad twist indices");
  }
  return build_generator(space.r, k).dense() * build_generator(space.r, l).dense();
}

/// Clifford product f_{i1} ... f_{ik} on the twist factor.
inline Eigen::MatrixXcd twist_word_operator(const TwistedSpinorSpace& space,
                                            const std::vector<int>& word) {
  if (space.r < 2) throw std::invalid_argument("twist_word_operator: r must be >= 2");
  const SpinorSpace sr(space.r);
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Identity(sr.dim(), sr.dim());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    op = build_generator(space.r, *it).dense() * op;
  }
  return op;
}

/// An element [g, [h, z]] of Spin^{c,r}(n); (g, h, z) and (-g, -h, z)
/// represent the same class.  For r <= 1 the h factor degenerates and
/// only carries a sign through its (possibly empty) factor list.
struct SpinCRElement {
  SpinElement g;
  SpinElement h;
  cplx z{1.0, 0.0};
};

/// The twisted representation z kappa_r(h) (x) kappa_n(g) as a pair of
/// dense blocks acting on Sigma_r (x) Delta_n.
struct TwistedOperator {
  Eigen::MatrixXcd twist;  // sigma_dim x sigma_dim
  Eigen::MatrixXcd spin;   // spin_dim x spin_dim
  cplx scale{1.0, 0.0};

  /// Coefficients are sigma_dim x spin_dim matrices (row = twist index).
  Eigen::MatrixXcd apply(const Eigen::MatrixXcd& coeffs) const {
    return scale * (twist * coeffs * spin.transpose());
  }

  Eigen::MatrixXcd dense() const {
    const Eigen::Index s = twist.rows(), d = spin.rows();
    Eigen::MatrixXcd out(s * d, s * d);
    for (Eigen::Index a = 0; a < s; ++a) {
      for (Eigen::Index b = 0; b < s; ++b) {
        out.block(a * d, b * d, d, d) = scale * twist(a, b) * spin;
      }
    }
    return out;
  }
};

inline TwistedOperator twisted_rep(const SpinCRElement& elem, const TwistedSpinorSpace& space) {
  if (elem.g.n != space.n || elem.h.n != space.r) {
    throw std::invalid_argument("twisted_rep: dimension mismatch");
  }
  if (std::abs(std::abs(elem.z) - 1.0) > kUnitFactorTol) {
    throw std::invalid_argument("twisted_rep: z must be a unit complex number");
  }
  TwistedOperator op;
  op.scale = elem.z;
  op.spin = rep_operator(elem.g);
  if (space.r >= 2) {
    op.twist = rep_operator(elem.h);
  } else {
    // Spin(0), Spin(1) = {+-1}: the factor list only encodes a sign.
    cplx sign(1, 0);
    if (space.r >= 1) {
      const Eigen::MatrixXcd m = rep_operator(elem.h);
      sign = m(0, 0);
    } else if (!elem.h.factors.empty()) {
      throw std::invalid_argument("twisted_rep: Spin(0) element must have no factors");
    }
    op.twist = Eigen::MatrixXcd::Constant(1, 1, sign);
  }
  return op;
}

}  // namespace spinlab
