#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "spinlab/clifford.hpp"
#include "spinlab/spin_group.hpp"
#include "spinlab/twisted_spinor.hpp"

namespace spinlab {

/// Rank decisions: singular values below kRankRelTol * sigma_max count as
/// zero; anything within a factor kRankAmbiguityBand of that threshold is
/// flagged instead of silently resolved.
constexpr double kRankRelTol = 1e-8;
constexpr double kRankAmbiguityBand = 1e3;

/// Sign of xi for the canonical r = 1 spinor: xi = (-1)^{m+1} e_{2m+1}.
inline int xi_canonical_sign(int m) { return (m % 2 == 0) ? -1 : 1; }

/// Identification data for Delta_{2m+r} = Delta_r (x) Delta_{2m}.  With
/// the Kronecker conventions of build_generator the identification is the
/// identity on coefficient tensors (Delta_r indices are the leading
/// factors); the generators split as
///   kappa_n(e_i)       = Id (x) kappa_{2m}(e_i),         i <= 2m,
///   kappa_n(e_{2m+k})  = kappa_r(f_k) (x) T^m,
/// where T^m equals (-1)^m times the Delta_{2m} chirality operator.
struct SplitIsomorphism {
  int m = 0;
  int r = 0;
  double tangent_residual = 0.0;   // generators i <= 2m
  double normal_residual = 0.0;    // generators 2m+1 .. 2m+r
  int chirality_phase = 1;         // (-1)^m
};

inline SplitIsomorphism split_isomorphism(int m, int r) {
  if (m < 1 || r < 0) throw std::invalid_argument("split_isomorphism: need m >= 1, r >= 0");
  const int n = 2 * m + r;
  SplitIsomorphism iso;
  iso.m = m;
  iso.r = r;
  iso.chirality_phase = (m % 2 == 0) ? 1 : -1;
  const int kr = r / 2;
  for (int i = 1; i <= 2 * m; ++i) {
    const StructuredOperator full = build_generator(n, i);
    const StructuredOperator small = build_generator(2 * m, i);
    double res = std::abs(full.scalar() - small.scalar());
    for (int j = 0; j < kr; ++j) {
      res = std::max(res, (full.factors()[static_cast<std::size_t>(j)] -
                           block::id()).cwiseAbs().maxCoeff());
    }
    for (int j = 0; j < m; ++j) {
      res = std::max(res,
                     (full.factors()[static_cast<std::size_t>(kr + j)] -
                      small.factors()[static_cast<std::size_t>(j)]).cwiseAbs().maxCoeff());
    }
    iso.tangent_residual = std::max(iso.tangent_residual, res);
  }
  for (int k = 1; k <= r; ++k) {
    const StructuredOperator full = build_generator(n, 2 * m + k);
    const StructuredOperator small = build_generator(r, k);
    double res = std::abs(full.scalar() - small.scalar());
    for (int j = 0; j < kr; ++j) {
      res = std::max(res, (full.factors()[static_cast<std::size_t>(j)] -
                           small.factors()[static_cast<std::size_t>(j)]).cwiseAbs().maxCoeff());
    }
    for (int j = 0; j < m; ++j) {
      res = std::max(res, (full.factors()[static_cast<std::size_t>(kr + j)] -
                           block::t()).cwiseAbs().maxCoeff());
    }
    iso.normal_residual = std::max(iso.normal_residual, res);
  }
  return iso;
}

/// The standard twisted partially pure spinor on the twist module:
///   phi_0 = 2^{-floor(r/2)/2} sum_I v_I (x) gamma_r(u_I) (x) u_{+...+},
/// summing over every sign pattern I of the twist basis.  The sum is the
/// canonical invariant element of Delta_r (x) Delta_r built from the
/// antilinear structure gamma_r, so the diagonal so(r) action kills it;
/// that is what makes the eta compatibility conditions hold.  For r <= 1
/// the twist factor is trivial and phi_0 sits on u_{+...+}.
inline TwistedSpinor canonical_spinor(int m, int r) {
  if (m < 1 || r < 0) throw std::invalid_argument("canonical_spinor: need m >= 1, r >= 0");
  const int n = 2 * m + r;
  const TwistedSpinorSpace space(n, r);
  TwistedSpinor phi(space);
  if (r <= 1) {
    phi.coeffs(0, 0) = 1.0;
    return phi;
  }
  const int kr = r / 2;
  const double prefactor = 1.0 / std::sqrt(double(Eigen::Index(1) << kr));
  const RealStructure gamma = gamma_structure(r);
  const SpinorSpace sr(r);
  const auto twist_idx = space.twist_basis_indices();
  for (std::size_t b = 0; b < twist_idx.size(); ++b) {
    Eigen::VectorXcd u = Eigen::VectorXcd::Zero(sr.dim());
    u[twist_idx[b]] = 1.0;
    const Eigen::VectorXcd g = gamma.apply(u);
    for (Eigen::Index j = 0; j < g.size(); ++j) {
      if (g[j] == cplx(0, 0)) continue;
      phi.coeffs(static_cast<Eigen::Index>(b), j << m) += prefactor * g[j];
    }
  }
  return phi;
}

/// eta_kl^phi(X, Y) = Re< X ^ Y . kappa_{r*}(f_k f_l) . phi, phi >, as an
/// antisymmetric n x n array over the standard frame.
inline SkewForm eta_form(const TwistedSpinor& phi, int k, int l) {
  if (phi.space.r < 2) throw std::invalid_argument("eta_form: r must be >= 2");
  if (!(k >= 1 && k < l && l <= phi.space.r)) {
    throw std::invalid_argument("eta_form: need 1 <= k < l <= r");
  }
  const int n = phi.space.n;
  const TwistedSpinor twisted = twist_pair_apply(k, l, phi);
  SkewForm eta = SkewForm::Zero(n, n);
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      TwistedSpinor v = twisted;
      for (Eigen::Index row = 0; row < v.coeffs.rows(); ++row) {
        Eigen::VectorXcd col = build_generator(n, b).apply(v.coeffs.row(row).transpose());
        v.coeffs.row(row) = build_generator(n, a).apply(col).transpose();
      }
      const double val = twisted_inner(v, phi).real();
      eta(a - 1, b - 1) = val;
      eta(b - 1, a - 1) = -val;
    }
  }
  return eta;
}

/// Skew endomorphism of a 2-form under the frozen contraction convention
/// etahat_{ji} = eta(e_i, e_j), i.e. the matrix transpose.
inline Eigen::MatrixXd eta_endo_matrix(const SkewForm& eta) {
  return eta.transpose();
}

inline Eigen::MatrixXd eta_endo(const TwistedSpinor& phi, int k, int l) {
  return eta_endo_matrix(eta_form(phi, k, l));
}

struct AnnihilatorResult {
  int dim = 0;                       // complex dimension of W
  Eigen::MatrixXcd basis;            // n x dim, Hermitian-orthonormal columns
  Eigen::VectorXd singular_values;   // of the map Z -> Z . phi
  bool rank_ambiguous = false;
  double isotropy_residual = 0.0;    // max |sum_i Z_i^2| over basis columns
};

/// Kernel of Z -> Z . phi over C^n, by singular value thresholding.
inline AnnihilatorResult annihilator_subspace(const TwistedSpinor& phi) {
  const int n = phi.space.n;
  if (phi.norm() == 0.0) throw std::invalid_argument("annihilator_subspace: phi must be nonzero");
  const Eigen::Index total = phi.space.total_dim();
  Eigen::MatrixXcd map(total, n);
  for (int j = 1; j <= n; ++j) {
    Eigen::VectorXd ej = Eigen::VectorXd::Zero(n);
    ej[j - 1] = 1.0;
    const TwistedSpinor image = spin_vector_apply(ej, phi);
    map.col(j - 1) = Eigen::Map<const Eigen::VectorXcd>(image.coeffs.data(), total);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(map, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv[0] : 0.0;
  const double threshold = kRankRelTol * smax;
  AnnihilatorResult out;
  out.singular_values = sv;
  int kernel = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] < threshold) ++kernel;
    if (sv[i] >= threshold / kRankAmbiguityBand && sv[i] <= threshold * kRankAmbiguityBand) {
      out.rank_ambiguous = true;
    }
  }
  kernel += n - static_cast<int>(sv.size());  // columns beyond the rank of the map
  out.dim = kernel;
  out.basis = svd.matrixV().rightCols(kernel);
  for (Eigen::Index c = 0; c < out.basis.cols(); ++c) {
    const cplx q = out.basis.col(c).transpose() * out.basis.col(c);  // bilinear, not Hermitian
    out.isotropy_residual = std::max(out.isotropy_residual, std::abs(q));
  }
  return out;
}

struct CRFrame {
  Eigen::MatrixXd V;           // n x 2m, orthonormal columns
  Eigen::MatrixXd J;           // 2m x 2m in the V basis
  Eigen::MatrixXd complement;  // n x r, orthonormal columns
  Eigen::MatrixXd J_ambient;   // n x n, J extended by zero on the complement
};

/// Realify the annihilator into (V, J): V = span{Z + conj Z}, and
/// J(Z + conj Z) = i (Z - conj Z).  Fails if W meets conj(W).
inline CRFrame extract_cr(const TwistedSpinor& phi, double tol = 1e-10) {
  const int n = phi.space.n;
  const AnnihilatorResult anni = annihilator_subspace(phi);
  const int m = anni.dim;
  if (m == 0) throw std::invalid_argument("extract_cr: annihilator is trivial");
  const Eigen::MatrixXcd& a = anni.basis;

  // W cap conj(W) = {0} iff [A, conj A] has full rank 2m.
  Eigen::MatrixXcd stacked(n, 2 * m);
  stacked.leftCols(m) = a;
  stacked.rightCols(m) = a.conjugate();
  Eigen::JacobiSVD<Eigen::MatrixXcd> stacked_svd(stacked);
  const Eigen::VectorXd ssv = stacked_svd.singularValues();
  if (ssv.size() < 2 * m || ssv[2 * m - 1] < tol * ssv[0]) {
    throw std::runtime_error("extract_cr: annihilator meets its conjugate (degenerate spinor)");
  }

  Eigen::MatrixXd real_span(n, 2 * m);
  real_span.leftCols(m) = a.real();
  real_span.rightCols(m) = a.imag();
  Eigen::JacobiSVD<Eigen::MatrixXd> span_svd(real_span, Eigen::ComputeFullU);
  CRFrame frame;
  frame.V = span_svd.matrixU().leftCols(2 * m);
  frame.complement = span_svd.matrixU().rightCols(n - 2 * m);

  // For v in V with v = A c + conj(A c): c = A^H v (W is Hermitian-
  // orthogonal to conj W by isotropy), and J v = -2 Im(A c).
  frame.J_ambient = -2.0 * (a * a.adjoint()).imag();
  frame.J = frame.V.transpose() * frame.J_ambient * frame.V;

  const Eigen::MatrixXd j2 = frame.J * frame.J +
                             Eigen::MatrixXd::Identity(2 * m, 2 * m);
  if (j2.norm() > 1e-8) {
    throw std::runtime_error("extract_cr: J^2 != -Id on the recovered distribution");
  }
  frame.J_ambient = frame.V * frame.J * frame.V.transpose();
  return frame;
}

struct PurityReport {
  double unit_norm_residual = 0.0;
  int annihilator_dim = 0;
  double eta_condition_residual = 0.0;
  double theta_orthogonality_residual = 0.0;
  double r4_residual = 0.0;
  bool has_r4 = false;
  bool rank_ambiguous = false;
  bool verdict = false;
};

/// Evaluates the defining conditions of a twisted partially pure spinor:
/// unit norm, annihilator dimension (n - r)/2, the eta compatibility
///   (eta_kl^phi + kappa_{r*}(f_k f_l)) . phi = 0,
/// the pairing conditions <kappa_{r*}(f_k f_l) . phi, phi> = 0 for all
/// k < l and, when r = 4, the quartic pairing
/// <kappa(f_1 f_2 f_3 f_4) . phi, phi> = 0.
inline PurityReport is_partially_pure(const TwistedSpinor& phi, double tol = 1e-10) {
  const int n = phi.space.n;
  const int r = phi.space.r;
  if (phi.norm() == 0.0) throw std::invalid_argument("is_partially_pure: phi must be nonzero");
  PurityReport report;
  report.unit_norm_residual = std::abs(phi.norm() - 1.0);
  const AnnihilatorResult anni = annihilator_subspace(phi);
  report.annihilator_dim = anni.dim;
  report.rank_ambiguous = anni.rank_ambiguous;
  if (r >= 2) {
    for (int k = 1; k <= r; ++k) {
      for (int l = k + 1; l <= r; ++l) {
        const SkewForm eta = eta_form(phi, k, l);
        const Eigen::MatrixXcd pair_op = twist_pair_operator(phi.space, k, l);
        const TwistedSpinor lhs = spin_form_apply(eta, phi) + twist_apply(pair_op, phi);
        report.eta_condition_residual =
            std::max(report.eta_condition_residual, lhs.norm());
        const cplx pairing = twisted_inner(twist_apply(pair_op, phi), phi);
        report.theta_orthogonality_residual =
            std::max(report.theta_orthogonality_residual, std::abs(pairing));
      }
    }
  }
  if (r == 4) {
    report.has_r4 = true;
    const Eigen::MatrixXcd quartic = twist_word_operator(phi.space, {1, 2, 3, 4});
    const cplx pairing = twisted_inner(twist_apply(quartic, phi), phi);
    report.r4_residual = std::abs(pairing);
  }
  const bool dims_ok = (n - r) % 2 == 0 && report.annihilator_dim == (n - r) / 2;
  report.verdict = dims_ok && report.unit_norm_residual < tol &&
                   report.eta_condition_residual < tol &&
                   report.theta_orthogonality_residual < tol &&
                   (!report.has_r4 || report.r4_residual < tol);
  return report;
}

/// xi_j = i < e_j . phi, phi >, a real vector by skew-adjointness.
inline Eigen::VectorXd xi_vector(const TwistedSpinor& phi, double imag_tol = 1e-10) {
  const int n = phi.space.n;
  Eigen::VectorXd xi(n);
  for (int j = 1; j <= n; ++j) {
    Eigen::VectorXd ej = Eigen::VectorXd::Zero(n);
    ej[j - 1] = 1.0;
    const cplx v = cplx(0, 1) * twisted_inner(spin_vector_apply(ej, phi), phi);
    if (std::abs(v.imag()) > imag_tol * std::max(1.0, phi.norm() * phi.norm())) {
      throw std::runtime_error("xi_vector: pairing has unexpected imaginary part");
    }
    xi[j - 1] = v.real();
  }
  return xi;
}

struct SoSpanReport {
  int rank = 0;
  double closure_residual = 0.0;
};

/// Rank of span{etahat_kl} (expect r(r-1)/2) and the distance of every
/// pairwise commutator from that span.
inline SoSpanReport so_r_span_check(const TwistedSpinor& phi) {
  const int r = phi.space.r;
  const int n = phi.space.n;
  if (r < 2) throw std::invalid_argument("so_r_span_check: r must be >= 2");
  std::vector<Eigen::MatrixXd> endos;
  for (int k = 1; k <= r; ++k) {
    for (int l = k + 1; l <= r; ++l) {
      endos.push_back(eta_endo(phi, k, l));
    }
  }
  const Eigen::Index p = static_cast<Eigen::Index>(endos.size());
  Eigen::MatrixXd flat(n * n, p);
  for (Eigen::Index c = 0; c < p; ++c) {
    flat.col(c) = Eigen::Map<const Eigen::VectorXd>(endos[static_cast<std::size_t>(c)].data(),
                                                    n * n);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(flat, Eigen::ComputeFullU);
  const Eigen::VectorXd sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv[0] : 0.0;
  SoSpanReport out;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (smax > 0.0 && sv[i] >= kRankRelTol * smax) ++out.rank;
  }
  const Eigen::MatrixXd basis = svd.matrixU().leftCols(out.rank);
  for (std::size_t a = 0; a < endos.size(); ++a) {
    for (std::size_t b = a + 1; b < endos.size(); ++b) {
      const Eigen::MatrixXd comm = endos[a] * endos[b] - endos[b] * endos[a];
      const Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(comm.data(), n * n);
      const double res = (v - basis * (basis.transpose() * v)).norm();
      out.closure_residual = std::max(out.closure_residual, res);
    }
  }
  return out;
}

}  // namespace spinlab
