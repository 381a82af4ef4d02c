#pragma once

#include <cstdint>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "spinlab/curvature.hpp"
#include "spinlab/flag_geometry.hpp"
#include "spinlab/io.hpp"
#include "spinlab/partially_pure.hpp"
#include "spinlab/report.hpp"
#include "spinlab/torus.hpp"

namespace spinlab {
namespace suites {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                              std::uint64_t c = 0) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ull * (a + 1) + 0x517cc1b727220a95ull * (b + 1) +
                    0x2545f4914f6cdd1dull * (c + 1);
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdull;
  x ^= x >> 33;
  return x;
}

inline TwistedSpinor random_unit_twisted(const TwistedSpinorSpace& space, Rng& rng) {
  Eigen::VectorXcd v = rng.complex_vector(static_cast<int>(space.total_dim()));
  v /= v.norm();
  return TwistedSpinor(space, Eigen::Map<Eigen::MatrixXcd>(v.data(), space.sigma_dim(),
                                                           space.spin_dim()));
}

// ---------------------------------------------------------------------------
// clifford: generator relations, unitarity, skew-adjointness, n = 1..12.
// ---------------------------------------------------------------------------
inline VerificationReport run_clifford(const SuiteConfig& cfg) {
  VerificationReport report;
  report.suite = "clifford";
  report.seed = cfg.seed;
  report.tolerance = cfg.tolerance;
  const double tol = 1e-12;
  const int n_max = cfg.n > 0 ? cfg.n : 12;
  for (int n = 1; n <= n_max; ++n) {
    double relation = 0.0;
    double unitary = 0.0;
    double skew = 0.0;
    for (int i = 1; i <= n; ++i) {
      const Eigen::MatrixXcd ki = build_generator(n, i).dense();
      const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(ki.rows(), ki.cols());
      unitary = std::max(unitary, (ki.adjoint() * ki - eye).norm());
      skew = std::max(skew, (ki.adjoint() + ki).norm());
      for (int j = 1; j <= n; ++j) {
        const Eigen::MatrixXcd kj = build_generator(n, j).dense();
        const double delta = (i == j) ? 2.0 : 0.0;
        relation = std::max(relation, (ki * kj + kj * ki + delta * eye).norm());
      }
    }
    report.add_check("clifford_relations", {{"n", n}}, relation, tol);
    report.add_check("generator_unitary", {{"n", n}}, unitary, tol);
    report.add_check("generator_skew_hermitian", {{"n", n}}, skew, tol);
  }
  return report;
}

// ---------------------------------------------------------------------------
// gamma: kind table, gamma^2 = +-Id, antilinearity, Spin-equivariance.
// ---------------------------------------------------------------------------
inline VerificationReport run_gamma(const SuiteConfig& cfg) {
  VerificationReport report;
  report.suite = "gamma";
  report.seed = cfg.seed;
  report.tolerance = cfg.tolerance;
  const int n_max = cfg.n > 1 ? cfg.n : 10;
  for (int n = 2; n <= n_max; ++n) {
    const RealStructure gamma = gamma_structure(n);
    const int res = n % 8;
    const bool expect_real = (res == 0 || res == 1 || res == 6 || res == 7);
    const bool kind_ok = (gamma.kind == StructureKind::kReal) == expect_real;
    const Eigen::MatrixXcd m = gamma.conj_op.dense();
    const Eigen::MatrixXcd square = m * m.conjugate();
    const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    const double sq_res = expect_real ? (square - eye).norm() : (square + eye).norm();
    report.add_condition("gamma_kind_mod8", {{"n", n}, {"kind", expect_real ? "real" : "quaternionic"}},
                         kind_ok);
    report.add_check("gamma_square", {{"n", n}}, sq_res, 1e-12);

    Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(n), 1));
    const SpinorSpace space(n);
    double antilinear = 0.0;
    double equivariance = 0.0;
    for (int t = 0; t < 20; ++t) {
      const Eigen::VectorXcd psi = rng.complex_vector(static_cast<int>(space.dim()));
      const cplx a(rng.normal(), rng.normal());
      antilinear = std::max(antilinear,
                            (gamma.apply((a * psi).eval()) - std::conj(a) * gamma.apply(psi)).norm());
      SpinElement g;
      g.n = n;
      const int pairs = 1 + static_cast<int>(rng.integer(3));
      for (int f = 0; f < 2 * pairs; ++f) g.factors.push_back(rng.unit_vector(n));
      const Eigen::MatrixXcd u = rep_operator(g);
      equivariance = std::max(equivariance,
                              (gamma.apply((u * psi).eval()) - u * gamma.apply(psi)).norm());
    }
    report.add_check("gamma_antilinear", {{"n", n}, {"trials", 20}}, antilinear, 1e-10);
    report.add_check("gamma_spin_equivariance", {{"n", n}, {"trials", 20}}, equivariance, 1e-10);
  }
  return report;
}

// ---------------------------------------------------------------------------
// purity: canonical spinors across the (m, r) grid, CR frame recovery,
// frame identity for eta, so(r) span, random negative controls.
// ---------------------------------------------------------------------------
inline VerificationReport run_purity(const SuiteConfig& cfg) {
  VerificationReport report;
  report.suite = "purity";
  report.seed = cfg.seed;
  report.tolerance = cfg.tolerance;
  std::vector<std::pair<int, int>> grid = {{1, 1}, {2, 1}, {1, 2}, {2, 2},
                                           {2, 3}, {3, 2}, {2, 4}};
  if (cfg.m > 0 && cfg.r >= 0) grid = {{cfg.m, cfg.r}};

  json purity_rows = json::array();
  for (const auto& [m, r] : grid) {
    const int n = 2 * m + r;
    const json params = {{"m", m}, {"r", r}, {"n", n}};
    const TwistedSpinor phi = canonical_spinor(m, r);
    const PurityReport purity = is_partially_pure(phi, 1e-12);
    json row = to_json(purity);
    row["m"] = m;
    row["r"] = r;
    purity_rows.push_back(row);
    report.add_condition("canonical_partially_pure", params, purity.verdict, "",
                         std::max({purity.unit_norm_residual, purity.eta_condition_residual,
                                   purity.theta_orthogonality_residual, purity.r4_residual}),
                         1e-12);
    if (purity.rank_ambiguous) {
      CheckRow warn;
      warn.check = "annihilator_rank_ambiguous";
      warn.params = params;
      warn.status = "warn";
      warn.details = "singular value near the rank threshold";
      report.add(std::move(warn));
    }

    const CRFrame frame = extract_cr(phi);
    Eigen::MatrixXd v_expected = Eigen::MatrixXd::Zero(n, 2 * m);
    v_expected.topRows(2 * m).setIdentity();
    const double v_angle =
        (frame.V * frame.V.transpose() - v_expected * v_expected.transpose()).norm();
    Eigen::MatrixXd c_expected = Eigen::MatrixXd::Zero(n, r);
    c_expected.bottomRows(r).setIdentity();
    const double c_angle =
        (frame.complement * frame.complement.transpose() - c_expected * c_expected.transpose())
            .norm();
    report.add_check("cr_frame_tangent_recovery", params, v_angle, 1e-10);
    report.add_check("cr_frame_complement_recovery", params, c_angle, 1e-10);
    Eigen::MatrixXd j_expected = Eigen::MatrixXd::Zero(n, n);
    j_expected.topLeftCorner(2 * m, 2 * m) = flag::standard_block_j(m);
    report.add_check("cr_frame_complex_structure", params,
                     (frame.J_ambient - j_expected).norm(), 1e-10);

    if (r >= 2) {
      double frame_identity = 0.0;
      for (int k = 1; k <= r; ++k) {
        for (int l = k + 1; l <= r; ++l) {
          const SkewForm expected = wedge2(n, 2 * m + k - 1, 2 * m + l - 1);
          frame_identity = std::max(
              frame_identity, (eta_form(phi, k, l) - expected).cwiseAbs().maxCoeff());
        }
      }
      report.add_check("eta_frame_identity", params, frame_identity, 1e-12);
      const SoSpanReport span = so_r_span_check(phi);
      report.add_condition("eta_span_rank", params, span.rank == r * (r - 1) / 2,
                           "rank " + std::to_string(span.rank));
      report.add_check("eta_span_closure", params, span.closure_residual, 1e-10);
    }
    if (r == 1) {
      const Eigen::VectorXd xi = xi_vector(phi);
      Eigen::VectorXd expected = Eigen::VectorXd::Zero(n);
      expected[n - 1] = xi_canonical_sign(m);
      report.add_check("xi_canonical_direction", params, (xi - expected).norm(), 1e-12);
    }
  }
  report.extra["purity_reports"] = purity_rows;

  // Random unit spinors must fail purity essentially always.
  Rng rng(mix_seed(cfg.seed, 17));
  const TwistedSpinorSpace random_space(6, 2);
  int failures = 0;
  const int trials = cfg.trials > 0 ? cfg.trials : 100;
  for (int t = 0; t < trials; ++t) {
    const TwistedSpinor psi = random_unit_twisted(random_space, rng);
    if (!is_partially_pure(psi, cfg.tolerance).verdict) ++failures;
  }
  report.add_condition("random_spinors_fail_purity",
                       {{"n", 6}, {"r", 2}, {"trials", trials}},
                       failures >= (trials * 99) / 100,
                       std::to_string(failures) + "/" + std::to_string(trials) + " failed");

  // Perturbed canonical spinor must fail.
  {
    TwistedSpinor phi = canonical_spinor(2, 3);
    phi.coeffs(0, phi.coeffs.cols() - 1) += 0.05;
    phi.coeffs /= phi.norm();
    report.add_condition("perturbed_canonical_fails", {{"m", 2}, {"r", 3}},
                         !is_partially_pure(phi, cfg.tolerance).verdict);
  }
  return report;
}

// ---------------------------------------------------------------------------
// flags: reductivity, invariance, involutivity and CR integrability on
// G_{m,1,r}, with expected verdict tables.
// ---------------------------------------------------------------------------

struct FlagVerdicts {
  // Golden verdict tables, identical across the (m, r) grid.  D1, D4,
  // D6perp and D7perp close under the bracket; so does D5, whose brackets
  // drop into u(m) plus the distribution itself.
  static bool involutive_expected(const std::string& name) {
    return name == "D1" || name == "D4" || name == "D5" || name == "D6perp" ||
           name == "D7perp";
  }
  static bool cr_expected(const std::string& name) {
    return name == "D1" || name == "D4" || name == "D5" || name == "D7";
  }
};

inline VerificationReport run_flags(const SuiteConfig& cfg) {
  VerificationReport report;
  report.suite = "flags";
  report.seed = cfg.seed;
  report.tolerance = cfg.tolerance;
  std::vector<std::pair<int, int>> grid = {{2, 2}, {2, 3}, {3, 2}};
  if (cfg.m > 0 && cfg.r > 0) grid = {{cfg.m, cfg.r}};
  const int s = 1;

  json rows = json::array();
  for (const auto& [m, r] : grid) {
    const int n = 2 * m + s + r;
    const std::string space_name =
        "G(" + std::to_string(m) + "," + std::to_string(s) + "," + std::to_string(r) + ")";
    const json params = {{"m", m}, {"s", s}, {"r", r}};
    const auto h = flag::isotropy_embedding(m, s, r);
    const auto summands = flag::tangent_decomposition(m, s, r);

    int h_dim = static_cast<int>(h.size());
    int m_dim = 0;
    for (const auto& ts : summands) m_dim += static_cast<int>(ts.basis.size());
    const bool dim_ok = h_dim == m * m + s * (s - 1) / 2 + r * (r - 1) / 2 &&
                        h_dim + m_dim == n * (n - 1) / 2;
    report.add_condition("flag_dimension_count", params, dim_ok,
                         "dim h = " + std::to_string(h_dim) + ", dim m = " + std::to_string(m_dim));

    double reductivity = 0.0;
    for (const auto& hb : h) {
      for (const auto& ts : summands) {
        for (const auto& xb : ts.basis) {
          const Eigen::MatrixXd bracket = hb * xb - xb * hb;
          Eigen::MatrixXd in_h = Eigen::MatrixXd::Zero(n, n);
          for (const auto& hb2 : h) {
            in_h += flag::so_inner(bracket, hb2) / flag::so_inner(hb2, hb2) * hb2;
          }
          reductivity = std::max(reductivity, flag::so_norm(in_h));
        }
      }
    }
    report.add_check("reductivity", params, reductivity, 1e-12);

    const auto dists = flag::candidate_distributions(m, r);
    const flag::InvariantJ j_op = flag::invariant_J(m, r);
    for (const auto& d : dists) {
      double invariance = 0.0;
      const auto onb = flag::detail::orthonormalize(d.basis);
      for (const auto& hb : h) {
        for (const auto& xb : d.basis) {
          const Eigen::MatrixXd bracket = flag::project_to_m(hb * xb - xb * hb, h);
          invariance = std::max(invariance, flag::detail::distance_to_span(bracket, onb));
        }
      }
      report.add_check("isotropy_invariance", {{"space", space_name}, {"distribution", d.name}},
                       invariance, 1e-12);

      const flag::BracketVerdict inv = flag::is_involutive(d, h, cfg.tolerance);
      const bool inv_expected = FlagVerdicts::involutive_expected(d.name);
      report.add_condition("involutive_verdict",
                           {{"space", space_name}, {"distribution", d.name}},
                           inv.verdict == inv_expected,
                           inv.verdict ? "involutive" : "not involutive", inv.max_residual,
                           cfg.tolerance);
      json row;
      row["space"] = space_name;
      row["distribution"] = d.name;
      row["involutive"] = inv.verdict;
      double max_res = inv.max_residual;
      if (d.complex) {
        const flag::BracketVerdict cr = flag::is_cr_integrable(d, j_op, h, cfg.tolerance);
        const bool cr_expected = FlagVerdicts::cr_expected(d.name);
        report.add_condition("cr_integrable_verdict",
                             {{"space", space_name}, {"distribution", d.name}},
                             cr.verdict == cr_expected,
                             cr.verdict ? "CR-integrable" : "not CR-integrable", cr.max_residual,
                             cfg.tolerance);
        row["cr_integrable"] = cr.verdict;
        max_res = std::max(max_res, cr.max_residual);
      } else {
        row["cr_integrable"] = nullptr;
      }
      row["max_residual"] = max_res;
      rows.push_back(row);
    }

    // dim G_{m,1,r} bookkeeping against the so(N) split.
    const int tangent = m * (m - 1) + 2 * m + 2 * m * r + r;
    const bool tangent_ok =
        tangent == n * (n - 1) / 2 - m * m - r * (r - 1) / 2;
    report.add_condition("tangent_dimension_formula", params, tangent_ok,
                         "dim = " + std::to_string(tangent));
  }
  report.extra["rows"] = rows;
  return report;
}

// ---------------------------------------------------------------------------
// curvature: seeded trials of the three identities, closed-form constant
// curvature case, and the non-Bianchi negative control.
// ---------------------------------------------------------------------------
inline VerificationReport run_curvature(const SuiteConfig& cfg) {
  VerificationReport report;
  report.suite = "curvature";
  report.seed = cfg.seed;
  report.tolerance = cfg.tolerance;
  const int trials = cfg.trials > 0 ? cfg.trials : 100;
  std::vector<int> n_grid = {4, 5, 6, 7, 8};
  std::vector<int> r_grid = {1, 2, 3};
  if (cfg.n > 0) n_grid = {cfg.n};
  if (cfg.r > 0) r_grid = {cfg.r};

  // Closed-form constant-curvature case.
  {
    const int n = n_grid.front();
    const AlgebraicCurvature rc = constant_curvature(n);
    const Eigen::MatrixXd ric = ricci(rc);
    const double ric_res =
        (ric - double(n - 1) * Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
    const double scal_res = std::abs(scalar_curvature(rc) - double(n * (n - 1)));
    report.add_check("constant_curvature_ricci", {{"n", n}}, ric_res, 1e-12);
    report.add_check("constant_curvature_scalar", {{"n", n}}, scal_res, 1e-12);
    const int m = (n % 2 == 0) ? n / 2 - 1 : n / 2;
    const int r_canon = n - 2 * m;
    const TwistedSpinor phi = canonical_spinor(m, r_canon);
    const AuxCurvature aux = AuxCurvature::zero(n, r_canon);
    Eigen::VectorXd e1 = Eigen::VectorXd::Zero(n);
    e1[0] = 1.0;
    report.add_check("constant_curvature_ricci_identity", {{"n", n}, {"r", r_canon}},
                     verify_ricci_identity(rc, aux, phi, e1), 1e-12);
  }

  json rows = json::array();
  for (int n : n_grid) {
    for (int r : r_grid) {
      const std::uint64_t combo_seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(n),
                                                static_cast<std::uint64_t>(r), 2);
      Rng rng(combo_seed);
      const TwistedSpinorSpace space(n, r);
      double ricci_max = 0.0, scalar_max = 0.0, theta_max = 0.0, theta_im_max = 0.0;
      for (int t = 0; t < trials; ++t) {
        const AlgebraicCurvature rc = random_curvature(n, 2, rng);
        const AuxCurvature aux = random_aux(n, r, rng);
        const TwistedSpinor phi = random_unit_twisted(space, rng);
        const Eigen::VectorXd x = rng.unit_vector(n);
        ricci_max = std::max(ricci_max, verify_ricci_identity(rc, aux, phi, x));
        scalar_max = std::max(scalar_max, verify_scalar_identity(rc, aux, phi));
        if (r >= 2) {
          const ThetaPairingResult tp = theta_pairing_check(aux, phi);
          theta_max = std::max(theta_max, tp.residual);
          theta_im_max = std::max(theta_im_max, tp.imaginary_part);
        }
      }
      auto emit = [&](const std::string& identity, double value) {
        report.add_check(identity, {{"n", n}, {"r", r}, {"trials", trials}}, value, 1e-10);
        json row;
        row["identity"] = identity;
        row["n"] = n;
        row["r"] = r;
        row["seed"] = combo_seed;
        row["trials"] = trials;
        row["max_residual"] = value;
        row["pass"] = value < 1e-10;
        rows.push_back(row);
      };
      emit("ricci", ricci_max);
      emit("scalar", scalar_max);
      if (r >= 2) {
        emit("theta_pairing", theta_max);
        report.add_check("theta_pairing_real", {{"n", n}, {"r", r}, {"trials", trials}},
                         theta_im_max, 1e-10);
      }
    }
  }
  report.extra["rows"] = rows;

  // Negative control: break only the first Bianchi identity and the Ricci
  // identity must blow up in at least 95% of trials.
  for (int n : n_grid) {
    Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(n), 0, 3));
    const TwistedSpinorSpace space(n, 1);
    const AuxCurvature aux = AuxCurvature::zero(n, 1);
    int bianchi_fails = 0;
    int identity_fails = 0;
    for (int t = 0; t < trials; ++t) {
      AlgebraicCurvature bad(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int k = 0; k < n; ++k)
            for (int l = k + 1; l < n; ++l) {
              double v = rng.uniform(-1.0, 1.0);
              if (std::make_pair(i, j) > std::make_pair(k, l)) {
                v = bad.at(k, l, i, j);  // keep pair symmetry, break Bianchi
              }
              bad.at(i, j, k, l) = v;
              bad.at(j, i, k, l) = -v;
              bad.at(i, j, l, k) = -v;
              bad.at(j, i, l, k) = v;
            }
      if (bad.bianchi_defect() > 1e-3) ++bianchi_fails;
      const TwistedSpinor phi = random_unit_twisted(space, rng);
      const Eigen::VectorXd x = rng.unit_vector(n);
      if (verify_ricci_identity(bad, aux, phi, x) > 1e-3) ++identity_fails;
    }
    report.add_condition("negative_control_bianchi", {{"n", n}, {"trials", trials}},
                         bianchi_fails >= (trials * 95) / 100,
                         std::to_string(bianchi_fails) + "/" + std::to_string(trials));
    report.add_condition("negative_control_ricci_identity", {{"n", n}, {"trials", trials}},
                         identity_fails >= (trials * 95) / 100,
                         std::to_string(identity_fails) + "/" + std::to_string(trials));
  }
  return report;
}

// ---------------------------------------------------------------------------
// torus: Schroedinger-Lichnerowicz wiring, spectra against dense
// diagonalization, harmonic kernels, eigenvalue bound.
// ---------------------------------------------------------------------------
inline VerificationReport run_torus(const SuiteConfig& cfg) {
  VerificationReport report;
  report.suite = "torus";
  report.seed = cfg.seed;
  report.tolerance = cfg.tolerance;
  const int cutoff = cfg.mode_cutoff > 0 ? cfg.mode_cutoff : 4;
  std::vector<int> n_grid = {2, 3, 4};
  std::vector<int> r_grid = {1, 2};
  if (cfg.n > 0) n_grid = {cfg.n};
  if (cfg.r > 0) r_grid = {cfg.r};

  json spectra = json::array();
  for (int n : n_grid) {
    for (int r : r_grid) {
      const json params = {{"n", n}, {"r", r}, {"K", cutoff}};
      Eigen::VectorXd a0 = Eigen::VectorXd::Zero(n);
      if (!cfg.holonomy.empty()) {
        for (int i = 0; i < n && i < static_cast<int>(cfg.holonomy.size()); ++i) {
          a0[i] = cfg.holonomy[static_cast<std::size_t>(i)];
        }
      }
      const TorusModel model(n, r, a0, cutoff);
      report.add_check("schroedinger_lichnerowicz_flat", params, verify_sl_flat(model), 1e-12);

      const Eigen::Index sigma = model.space().sigma_dim();
      const Eigen::Index spin = model.space().spin_dim();
      double spectrum_res = 0.0;
      bool multiplicity_ok = true;
      for (const auto& k : model.modes()) {
        const Eigen::MatrixXcd block = dirac_mode_block(model, k);
        spectrum_res = std::max(spectrum_res, (block - block.adjoint()).norm());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(block);
        const double w = model.shifted(k).norm();
        const Eigen::VectorXd eigs = es.eigenvalues();
        const Eigen::Index half = sigma * spin / 2;
        for (Eigen::Index idx = 0; idx < eigs.size(); ++idx) {
          const double expect = idx < half ? -w : w;
          spectrum_res = std::max(spectrum_res, std::abs(eigs[idx] - expect));
        }
        if (w > 1e-12) {
          int neg = 0, pos = 0;
          for (Eigen::Index idx = 0; idx < eigs.size(); ++idx) (eigs[idx] < 0 ? neg : pos)++;
          multiplicity_ok = multiplicity_ok && neg == half && pos == half;
        }
      }
      report.add_check("spectrum_vs_dense_diagonalization", params, spectrum_res, 1e-12);
      report.add_condition("spectrum_multiplicities", params, multiplicity_ok,
                           "sigma_dim*2^(floor(n/2)-1) per sign per mode");

      const HarmonicKernel kern0 = harmonic_kernel(model);
      const bool kernel0_ok =
          cfg.holonomy.empty() ? kern0.dimension == static_cast<int>(sigma * spin) : true;
      report.add_condition("harmonic_kernel_integer_holonomy", params, kernel0_ok,
                           "dim = " + std::to_string(kern0.dimension));

      Eigen::VectorXd a_frac = Eigen::VectorXd::Zero(n);
      a_frac[0] = 0.3;
      const TorusModel model_frac(n, r, a_frac, cutoff);
      const HarmonicKernel kern_frac = harmonic_kernel(model_frac);
      report.add_condition("harmonic_kernel_fractional_holonomy", params,
                           kern_frac.dimension == 0,
                           "dim = " + std::to_string(kern_frac.dimension));

      const EigenvalueBoundReport bound0 = eigenvalue_bound_check(model);
      const EigenvalueBoundReport bound_frac = eigenvalue_bound_check(model_frac);
      const bool bound_ok = bound0.min_lambda_sq >= 0.0 &&
                            bound0.bound_attained == (bound0.kernel_dimension > 0) &&
                            bound_frac.min_lambda_sq >= 0.0 &&
                            bound_frac.bound_attained == (bound_frac.kernel_dimension > 0);
      report.add_condition("eigenvalue_bound", params, bound_ok,
                           "min lambda^2 = " + json(bound0.min_lambda_sq).dump() + " / " +
                               json(bound_frac.min_lambda_sq).dump());

      spectra.push_back(spectrum_to_json(model));
    }
  }
  report.extra["spectra"] = spectra;
  return report;
}

inline VerificationReport run_single_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "clifford") return run_clifford(cfg);
  if (name == "gamma") return run_gamma(cfg);
  if (name == "purity") return run_purity(cfg);
  if (name == "flags") return run_flags(cfg);
  if (name == "curvature") return run_curvature(cfg);
  if (name == "torus") return run_torus(cfg);
  throw std::invalid_argument("unknown suite: " + name);
}

struct SuiteRun {
  json report;
  bool passed = false;
};

inline SuiteRun run_suite(const std::string& name, const SuiteConfig& cfg) {
  SuiteRun run;
  if (name == "all") {
    json combined;
    combined["suite"] = "all";
    combined["rng"] = Rng::algorithm();
    combined["seed"] = cfg.seed;
    combined["tolerance"] = cfg.tolerance;
    json reports = json::array();
    int pass = 0, fail = 0, warn = 0;
    for (const std::string sub : {"clifford", "gamma", "purity", "flags", "curvature", "torus"}) {
      std::cerr << "[spinlab] running " << sub << "\n";
      const VerificationReport r = run_single_suite(sub, cfg);
      reports.push_back(r.to_json());
      pass += r.count("pass");
      fail += r.count("fail");
      warn += r.count("warn");
    }
    combined["reports"] = reports;
    combined["summary"] = {{"pass", pass}, {"fail", fail}, {"warn", warn}};
    run.report = combined;
    run.passed = fail == 0;
    return run;
  }
  const VerificationReport r = run_single_suite(name, cfg);
  run.report = r.to_json();
  run.passed = r.passed();
  return run;
}

}  // namespace suites
}  // namespace spinlab
