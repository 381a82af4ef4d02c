#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace spinlab {
namespace flag {

/// Invariant inner product on so(N): <A, B> = -tr(AB)/2, under which the
/// standard generators E_ij (i < j) are orthonormal.
inline double so_inner(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return -0.5 * (a * b).trace();
}

inline double so_norm(const Eigen::MatrixXd& a) {
  return std::sqrt(std::max(0.0, so_inner(a, a)));
}

/// E_ij = e_i^* (x) e_j - e_j^* (x) e_i, 0-indexed arguments.
inline Eigen::MatrixXd e_generator(int n, int i, int j) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  m(j, i) = 1.0;
  m(i, j) = -1.0;
  return m;
}

struct SoAlgebra {
  int N = 0;
  std::vector<Eigen::MatrixXd> basis;

  explicit SoAlgebra(int n) : N(n) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) basis.push_back(e_generator(n, i, j));
  }

  int dim() const { return N * (N - 1) / 2; }
};

/// Standard block complex structure on R^{2m}: J0 e_{2s-1} = e_{2s}.
inline Eigen::MatrixXd standard_block_j(int m) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  for (int s = 0; s < m; ++s) {
    j(2 * s + 1, 2 * s) = 1.0;
    j(2 * s, 2 * s + 1) = -1.0;
  }
  return j;
}

/// Coordinate layout for G_{m,s,r}: R^{2m+s+r} splits as the complex block
/// (first 2m coordinates), then the s-block, then the r-block.
struct FlagShape {
  int m = 0, s = 0, r = 0;
  int N() const { return 2 * m + s + r; }
  int s_offset() const { return 2 * m; }
  int r_offset() const { return 2 * m + s; }
};

/// Basis of the isotropy algebra u(m) + so(s) + so(r) inside so(N).
/// Elements are normalized to unit so-norm.
inline std::vector<Eigen::MatrixXd> isotropy_embedding(int m, int s, int r) {
  if (m < 1 || s < 0 || r < 0) throw std::invalid_argument("isotropy_embedding: bad shape");
  const FlagShape shape{m, s, r};
  const int n = shape.N();
  std::vector<Eigen::MatrixXd> h;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  // u(m): commutant of J0 in so(2m).
  for (int a = 0; a < m; ++a) {
    h.push_back(e_generator(n, 2 * a, 2 * a + 1));
    for (int b = a + 1; b < m; ++b) {
      h.push_back(inv_sqrt2 * (e_generator(n, 2 * a, 2 * b) +
                               e_generator(n, 2 * a + 1, 2 * b + 1)));
      h.push_back(inv_sqrt2 * (e_generator(n, 2 * a, 2 * b + 1) -
                               e_generator(n, 2 * a + 1, 2 * b)));
    }
  }
  for (int a = 0; a < s; ++a)
    for (int b = a + 1; b < s; ++b)
      h.push_back(e_generator(n, shape.s_offset() + a, shape.s_offset() + b));
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b)
      h.push_back(e_generator(n, shape.r_offset() + a, shape.r_offset() + b));
  return h;
}

enum class SummandLabel { kLambda2Cm, kCmRs, kCmRr, kRsRr };

inline std::string summand_name(SummandLabel label) {
  switch (label) {
    case SummandLabel::kLambda2Cm: return "Lambda2Cm";
    case SummandLabel::kCmRs: return "CmxRs";
    case SummandLabel::kCmRr: return "CmxRr";
    case SummandLabel::kRsRr: return "RsxRr";
  }
  return "?";
}

struct TangentSummand {
  SummandLabel label;
  std::vector<Eigen::MatrixXd> basis;  // unit so-norm, pairwise orthogonal
};

/// The reductive complement of the isotropy algebra, split into the four
/// invariant summands (empty ones omitted):
///   Lambda^2 C^m (dim m(m-1)), C^m (x) R^s (2ms), C^m (x) R^r (2mr),
///   R^s (x) R^r (sr).
inline std::vector<TangentSummand> tangent_decomposition(int m, int s, int r) {
  if (m < 1 || s < 0 || r < 0) throw std::invalid_argument("tangent_decomposition: bad shape");
  const FlagShape shape{m, s, r};
  const int n = shape.N();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<TangentSummand> out;

  TangentSummand lambda{SummandLabel::kLambda2Cm, {}};
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      lambda.basis.push_back(inv_sqrt2 * (e_generator(n, 2 * a, 2 * b) -
                                          e_generator(n, 2 * a + 1, 2 * b + 1)));
      lambda.basis.push_back(inv_sqrt2 * (e_generator(n, 2 * a, 2 * b + 1) +
                                          e_generator(n, 2 * a + 1, 2 * b)));
    }
  }
  if (!lambda.basis.empty()) out.push_back(std::move(lambda));

  TangentSummand cm_rs{SummandLabel::kCmRs, {}};
  for (int a = 0; a < s; ++a)
    for (int i = 0; i < 2 * m; ++i)
      cm_rs.basis.push_back(e_generator(n, i, shape.s_offset() + a));
  if (!cm_rs.basis.empty()) out.push_back(std::move(cm_rs));

  TangentSummand cm_rr{SummandLabel::kCmRr, {}};
  for (int b = 0; b < r; ++b)
    for (int i = 0; i < 2 * m; ++i)
      cm_rr.basis.push_back(e_generator(n, i, shape.r_offset() + b));
  if (!cm_rr.basis.empty()) out.push_back(std::move(cm_rr));

  TangentSummand rs_rr{SummandLabel::kRsRr, {}};
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < r; ++b)
      rs_rr.basis.push_back(e_generator(n, shape.s_offset() + a, shape.r_offset() + b));
  if (!rs_rr.basis.empty()) out.push_back(std::move(rs_rr));

  return out;
}

/// X minus its orthogonal projection onto span(h) under -tr(AB)/2.
inline Eigen::MatrixXd project_to_m(const Eigen::MatrixXd& x,
                                    const std::vector<Eigen::MatrixXd>& h_basis) {
  Eigen::MatrixXd out = x;
  for (const auto& h : h_basis) {
    out -= so_inner(out, h) / so_inner(h, h) * h;
  }
  return out;
}

struct InvariantDistribution {
  std::string name;
  std::vector<SummandLabel> summands;
  std::vector<Eigen::MatrixXd> basis;
  bool complex = false;  // true when every summand carries the induced J
};

/// The distributions D_1..D_7 of G_{m,1,r} and their orthogonal
/// complements, assembled from the tangent summands.
inline std::vector<InvariantDistribution> candidate_distributions(int m, int r) {
  const int s = 1;
  const auto summands = tangent_decomposition(m, s, r);
  auto pick = [&](const std::vector<SummandLabel>& labels) {
    std::vector<Eigen::MatrixXd> basis;
    for (const auto& ts : summands) {
      for (SummandLabel want : labels) {
        if (ts.label == want) {
          basis.insert(basis.end(), ts.basis.begin(), ts.basis.end());
        }
      }
    }
    return basis;
  };
  const SummandLabel L = SummandLabel::kLambda2Cm;
  const SummandLabel Cs = SummandLabel::kCmRs;
  const SummandLabel Cr = SummandLabel::kCmRr;
  const SummandLabel RR = SummandLabel::kRsRr;
  const std::vector<std::pair<std::string, std::vector<SummandLabel>>> defs = {
      {"D1", {L}},          {"D2", {Cr}},         {"D3", {Cs}},
      {"D4", {L, Cr}},      {"D5", {L, Cs}},      {"D6", {Cr, Cs}},
      {"D7", {L, Cr, Cs}},
  };
  std::vector<InvariantDistribution> out;
  for (const auto& [name, labels] : defs) {
    InvariantDistribution d;
    d.name = name;
    d.summands = labels;
    d.basis = pick(labels);
    d.complex = true;
    out.push_back(std::move(d));

    std::vector<SummandLabel> rest;
    for (SummandLabel cand : {L, Cs, Cr, RR}) {
      if (std::find(labels.begin(), labels.end(), cand) == labels.end()) rest.push_back(cand);
    }
    InvariantDistribution dp;
    dp.name = name + "perp";
    dp.summands = rest;
    dp.basis = pick(rest);
    dp.complex = false;  // always contains R^s (x) R^r
    out.push_back(std::move(dp));
  }
  return out;
}

/// The invariant complex structure on the complex summands of
/// T G_{m,1,r}: left multiplication by the block J0 on the first-2m
/// rows of each summand (the Lambda^2 block through its J0-anticommuting
/// part, the mixed blocks column by column).
struct InvariantJ {
  int m = 0, s = 1, r = 0;

  Eigen::MatrixXd apply(const Eigen::MatrixXd& x) const {
    const FlagShape shape{m, s, r};
    const int n = shape.N();
    if (x.rows() != n || x.cols() != n) throw std::invalid_argument("InvariantJ: shape mismatch");
    const Eigen::MatrixXd j0 = standard_block_j(m);
    const Eigen::MatrixXd b = x.topLeftCorner(2 * m, 2 * m);
    const Eigen::MatrixXd b_anti = 0.5 * (b + j0 * b * j0);
    const Eigen::MatrixXd mixed = x.topRightCorner(2 * m, s + r);
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
    out.topLeftCorner(2 * m, 2 * m) = j0 * b_anti;
    out.topRightCorner(2 * m, s + r) = j0 * mixed;
    out.bottomLeftCorner(s + r, 2 * m) = -(j0 * mixed).transpose();
    return out;
  }
};

inline InvariantJ invariant_J(int m, int r) {
  if (m < 1 || r < 1) throw std::invalid_argument("invariant_J: need m >= 1, r >= 1");
  return InvariantJ{m, 1, r};
}

struct BracketVerdict {
  bool verdict = true;
  double max_residual = 0.0;
  int witness_a = -1;
  int witness_b = -1;
};

namespace detail {

/// Orthonormalize a list of skew matrices under so_inner (they are already
/// orthogonal by construction; this guards against scaling slips).
inline std::vector<Eigen::MatrixXd> orthonormalize(const std::vector<Eigen::MatrixXd>& basis) {
  std::vector<Eigen::MatrixXd> out;
  for (const auto& x : basis) {
    Eigen::MatrixXd v = x;
    for (const auto& u : out) v -= so_inner(v, u) * u;
    const double nv = so_norm(v);
    if (nv > 1e-12) out.push_back(v / nv);
  }
  return out;
}

inline double distance_to_span(const Eigen::MatrixXd& x,
                               const std::vector<Eigen::MatrixXd>& onb) {
  Eigen::MatrixXd v = x;
  for (const auto& u : onb) v -= so_inner(v, u) * u;
  return so_norm(v);
}

}  // namespace detail

/// Involutivity at the Lie algebra level: the m-projection of every
/// bracket of basis elements stays inside span(D).
inline BracketVerdict is_involutive(const InvariantDistribution& d,
                                    const std::vector<Eigen::MatrixXd>& h_basis,
                                    double tol = 1e-10) {
  const auto onb = detail::orthonormalize(d.basis);
  BracketVerdict out;
  for (std::size_t a = 0; a < d.basis.size(); ++a) {
    for (std::size_t b = a + 1; b < d.basis.size(); ++b) {
      const Eigen::MatrixXd bracket = d.basis[a] * d.basis[b] - d.basis[b] * d.basis[a];
      const double res = detail::distance_to_span(project_to_m(bracket, h_basis), onb);
      if (res > out.max_residual) {
        out.max_residual = res;
        out.witness_a = static_cast<int>(a);
        out.witness_b = static_cast<int>(b);
      }
    }
  }
  out.verdict = out.max_residual < tol;
  return out;
}

/// The three CR conditions on beta(X, Y) = proj_m [X, Y]:
///   (1) beta(X,Y) - beta(JX,JY) in D,
///   (2) beta(JX,Y) + beta(X,JY) in D,
///   (3) J(beta(X,Y) - beta(JX,JY)) = beta(JX,Y) + beta(X,JY).
inline BracketVerdict is_cr_integrable(const InvariantDistribution& d, const InvariantJ& j,
                                       const std::vector<Eigen::MatrixXd>& h_basis,
                                       double tol = 1e-10) {
  if (!d.complex) {
    throw std::invalid_argument("is_cr_integrable: J is not defined on " + d.name);
  }
  const auto onb = detail::orthonormalize(d.basis);
  auto beta = [&](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
    return project_to_m(x * y - y * x, h_basis);
  };
  BracketVerdict out;
  for (std::size_t a = 0; a < d.basis.size(); ++a) {
    for (std::size_t b = a; b < d.basis.size(); ++b) {
      const Eigen::MatrixXd& x = d.basis[a];
      const Eigen::MatrixXd& y = d.basis[b];
      const Eigen::MatrixXd jx = j.apply(x);
      const Eigen::MatrixXd jy = j.apply(y);
      const Eigen::MatrixXd c1 = beta(x, y) - beta(jx, jy);
      const Eigen::MatrixXd c2 = beta(jx, y) + beta(x, jy);
      double res = detail::distance_to_span(c1, onb);
      res = std::max(res, detail::distance_to_span(c2, onb));
      res = std::max(res, so_norm(j.apply(c1) - c2));
      if (res > out.max_residual) {
        out.max_residual = res;
        out.witness_a = static_cast<int>(a);
        out.witness_b = static_cast<int>(b);
      }
    }
  }
  out.verdict = out.max_residual < tol;
  return out;
}

}  // namespace flag
}  // namespace spinlab
