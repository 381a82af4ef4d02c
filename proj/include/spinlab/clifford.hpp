#pragma once

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "spinlab/forms.hpp"
#include "spinlab/spinor.hpp"
#include "spinlab/structured_op.hpp"

namespace spinlab {

/// kappa(e_i) on Delta_n, 1-indexed i.  The generator pair (e_1, e_2)
/// acts on the last Kronecker factor, (e_3, e_4) on the next-to-last
/// with a trailing T, and so on; in odd dimension e_n is i T^{(n-1)/2}.
/// For n = 1 this degenerates to the 1x1 scalar i.
inline StructuredOperator build_generator(int n, int i) {
  if (n < 1) throw std::invalid_argument("build_generator: n must be >= 1");
  if (i < 1 || i > n) throw std::invalid_argument("build_generator: index out of range");
  const int k = n / 2;
  std::vector<Eigen::Matrix2cd> factors(static_cast<std::size_t>(k), block::id());
  if (n % 2 == 1 && i == n) {
    for (auto& f : factors) f = block::t();
    return StructuredOperator(cplx(0, 1), std::move(factors));
  }
  const int pair = (i + 1) / 2;           // 1-based pair index
  const int pos = k - pair;               // 0-based factor slot of g1/g2
  factors[static_cast<std::size_t>(pos)] = (i % 2 == 1) ? block::g1() : block::g2();
  for (int t = pos + 1; t < k; ++t) factors[static_cast<std::size_t>(t)] = block::t();
  return StructuredOperator(1.0, std::move(factors));
}

/// Clifford multiplication by a real vector, x . psi = kappa(x)(psi).
inline Eigen::VectorXcd clifford_mul_vector(const Eigen::VectorXd& x,
                                            const SpinorSpace& space,
                                            const Eigen::VectorXcd& coeffs) {
  if (x.size() != space.n) {
    throw std::invalid_argument("clifford_mul_vector: vector length != n");
  }
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(coeffs.size());
  for (int i = 1; i <= space.n; ++i) {
    if (x[i - 1] == 0.0) continue;
    out += x[i - 1] * build_generator(space.n, i).apply(coeffs);
  }
  return out;
}

inline Spinor clifford_mul_vector(const Eigen::VectorXd& x, const Spinor& psi) {
  return Spinor(psi.space, clifford_mul_vector(x, psi.space, psi.coeffs));
}

/// Complex-linear extension, used for annihilator computations.
inline Eigen::VectorXcd clifford_mul_cvector(const Eigen::VectorXcd& z,
                                             const SpinorSpace& space,
                                             const Eigen::VectorXcd& coeffs) {
  if (z.size() != space.n) {
    throw std::invalid_argument("clifford_mul_cvector: vector length != n");
  }
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(coeffs.size());
  for (int i = 1; i <= space.n; ++i) {
    if (z[i - 1] == 0.0) continue;
    out += z[i - 1] * build_generator(space.n, i).apply(coeffs);
  }
  return out;
}

constexpr double kFormAntisymmetryTol = 1e-10;

/// A degree-k antisymmetric array acts through its strictly increasing
/// components only (no 1/k! factor):
///   omega . psi = sum_{i1<...<ik} omega_{i1...ik} e_{i1} ... e_{ik} . psi.
inline Eigen::VectorXcd clifford_mul_form(const AntisymmetricForm& w,
                                          const SpinorSpace& space,
                                          const Eigen::VectorXcd& coeffs) {
  if (w.n() != space.n) {
    throw std::invalid_argument("clifford_mul_form: form dimension != n");
  }
  if (w.antisymmetry_defect() > kFormAntisymmetryTol) {
    throw std::invalid_argument("clifford_mul_form: coefficient array is not antisymmetric");
  }
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(coeffs.size());
  w.for_each_increasing([&](const std::vector<int>& idx, double c) {
    if (c == 0.0) return;
    Eigen::VectorXcd v = coeffs;
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
      v = build_generator(space.n, *it + 1).apply(v);
    }
    out += c * v;
  });
  return out;
}

inline Spinor clifford_mul_form(const AntisymmetricForm& w, const Spinor& psi) {
  return Spinor(psi.space, clifford_mul_form(w, psi.space, psi.coeffs));
}

inline Eigen::VectorXcd clifford_mul_form(const SkewForm& w, const SpinorSpace& space,
                                          const Eigen::VectorXcd& coeffs) {
  if (w.rows() != space.n || w.cols() != space.n) {
    throw std::invalid_argument("clifford_mul_form: form dimension != n");
  }
  if (w.size() > 0 && skew_defect(w) > kFormAntisymmetryTol) {
    throw std::invalid_argument("clifford_mul_form: matrix is not antisymmetric");
  }
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(coeffs.size());
  for (int i = 1; i <= space.n; ++i) {
    for (int j = i + 1; j <= space.n; ++j) {
      if (w(i - 1, j - 1) == 0.0) continue;
      out += w(i - 1, j - 1) *
             build_generator(space.n, i).apply(build_generator(space.n, j).apply(coeffs));
    }
  }
  return out;
}

inline Spinor clifford_mul_form(const SkewForm& w, const Spinor& psi) {
  return Spinor(psi.space, clifford_mul_form(w, psi.space, psi.coeffs));
}

enum class StructureKind { kReal, kQuaternionic };

/// Antilinear real/quaternionic structure on Delta_n: entrywise complex
/// conjugation (in u-coordinates) followed by a structured linear map.
struct RealStructure {
  int n = 0;
  StructureKind kind = StructureKind::kReal;
  StructuredOperator conj_op;

  Eigen::VectorXcd apply(const Eigen::VectorXcd& coeffs) const {
    return conj_op.apply(coeffs.conjugate());
  }

  Spinor apply(const Spinor& psi) const {
    return Spinor(psi.space, apply(psi.coeffs));
  }
};

/// gamma_n built from alpha/beta words by residue of n mod 8:
///   8k, 8k+1 : (alpha beta)^{2k}          (real)
///   8k+2,8k+3: alpha (beta alpha)^{2k}    (quaternionic)
///   8k+4,8k+5: (alpha beta)^{2k+1}        (quaternionic)
///   8k+6,8k+7: alpha (beta alpha)^{2k+1}  (real)
inline RealStructure gamma_structure(int n) {
  if (n < 2) throw std::invalid_argument("gamma_structure: n must be >= 2");
  const int res = n % 8;
  const int k = n / 8;
  const bool real = (res == 0 || res == 1 || res == 6 || res == 7);
  std::vector<Eigen::Matrix2cd> word;
  auto append_pair = [&](const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b, int times) {
    for (int t = 0; t < times; ++t) {
      word.push_back(a);
      word.push_back(b);
    }
  };
  switch (res) {
    case 0:
    case 1:
      append_pair(block::alpha_linear(), block::beta_linear(), 2 * k);
      break;
    case 2:
    case 3:
      word.push_back(block::alpha_linear());
      append_pair(block::beta_linear(), block::alpha_linear(), 2 * k);
      break;
    case 4:
    case 5:
      append_pair(block::alpha_linear(), block::beta_linear(), 2 * k + 1);
      break;
    default:
      word.push_back(block::alpha_linear());
      append_pair(block::beta_linear(), block::alpha_linear(), 2 * k + 1);
      break;
  }
  if (static_cast<int>(word.size()) != n / 2) {
    throw std::logic_error("gamma_structure: word length mismatch");
  }
  RealStructure gs;
  gs.n = n;
  gs.kind = real ? StructureKind::kReal : StructureKind::kQuaternionic;
  gs.conj_op = StructuredOperator(1.0, std::move(word));
  return gs;
}

}  // namespace spinlab
