#include <catch2/catch_amalgamated.hpp>

#include "spinlab/flag_geometry.hpp"
#include "spinlab/io.hpp"
#include "spinlab/partially_pure.hpp"
#include "spinlab/rng.hpp"

using namespace spinlab;

namespace {

const std::vector<std::pair<int, int>> kGrid = {{1, 1}, {2, 1}, {1, 2}, {2, 2},
                                                {2, 3}, {3, 2}, {2, 4}};

TwistedSpinor random_unit(const TwistedSpinorSpace& space, Rng& rng) {
  Eigen::VectorXcd v = rng.complex_vector(static_cast<int>(space.total_dim()));
  v /= v.norm();
  return TwistedSpinor(space,
                       Eigen::Map<Eigen::MatrixXcd>(v.data(), space.sigma_dim(), space.spin_dim()));
}

}  // namespace

TEST_CASE("split identification of the twisted generators", "[partially_pure]") {
  for (const auto& [m, r] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {1, 2}, {3, 1},
                                                             {2, 3}, {2, 4}}) {
    const SplitIsomorphism iso = split_isomorphism(m, r);
    INFO("m=" << m << " r=" << r);
    REQUIRE(iso.tangent_residual < 1e-12);
    REQUIRE(iso.normal_residual < 1e-12);
    REQUIRE(iso.chirality_phase == ((m % 2 == 0) ? 1 : -1));
  }
}

TEST_CASE("canonical spinor coefficients", "[partially_pure]") {
  SECTION("r = 2, m = 1: two terms from gamma_2") {
    const TwistedSpinor phi = canonical_spinor(1, 2);
    REQUIRE(phi.space.sigma_dim() == 2);
    REQUIRE(phi.space.spin_dim() == 4);
    const double c = 1.0 / std::sqrt(2.0);
    // gamma_2(u_{+1}) = -i u_{-1}: twist row v_{+1} holds -i/sqrt2 on
    // Delta_4 index (-1, +1); gamma_2(u_{-1}) = i u_{+1}: row v_{-1}
    // holds i/sqrt2 on (+1, +1).
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(2, 4);
    expected(0, 2) = cplx(0, -c);
    expected(1, 0) = cplx(0, c);
    REQUIRE((phi.coeffs - expected).norm() < 1e-15);
  }
  SECTION("r = 3, m = 2: two coefficient groups with prefactor 1/sqrt2") {
    const TwistedSpinor phi = canonical_spinor(2, 3);
    int nonzero_rows = 0;
    for (Eigen::Index t = 0; t < phi.coeffs.rows(); ++t) {
      if (phi.coeffs.row(t).norm() > 0) ++nonzero_rows;
      for (Eigen::Index s = 0; s < phi.coeffs.cols(); ++s) {
        if (std::abs(phi.coeffs(t, s)) > 0) {
          REQUIRE(std::abs(phi.coeffs(t, s)) == Catch::Approx(1.0 / std::sqrt(2.0)));
        }
      }
    }
    REQUIRE(nonzero_rows == 2);
  }
  SECTION("r <= 1 sits on u_{+...+}") {
    const TwistedSpinor phi = canonical_spinor(2, 1);
    REQUIRE(phi.coeffs(0, 0) == cplx(1, 0));
    REQUIRE(phi.norm() == Catch::Approx(1.0));
  }
  for (const auto& [m, r] : kGrid) {
    REQUIRE(canonical_spinor(m, r).norm() == Catch::Approx(1.0).margin(1e-14));
  }
}

TEST_CASE("eta forms of the canonical spinor", "[partially_pure]") {
  for (const auto& [m, r] : kGrid) {
    if (r < 2) continue;
    const int n = 2 * m + r;
    const TwistedSpinor phi = canonical_spinor(m, r);
    for (int k = 1; k <= r; ++k) {
      for (int l = k + 1; l <= r; ++l) {
        const SkewForm expected = wedge2(n, 2 * m + k - 1, 2 * m + l - 1);
        INFO("m=" << m << " r=" << r << " k=" << k << " l=" << l);
        REQUIRE((eta_form(phi, k, l) - expected).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }
}

TEST_CASE("eta form properties", "[partially_pure]") {
  Rng rng(3);
  const TwistedSpinorSpace space(6, 2);
  const TwistedSpinor phi = random_unit(space, rng);

  // Unit phase invariance.
  const cplx z = rng.unit_complex();
  REQUIRE((eta_form(phi, 1, 2) - eta_form(phi * z, 1, 2)).cwiseAbs().maxCoeff() < 1e-12);

  // Antisymmetry under the twist index swap, through the pair operator.
  const Eigen::MatrixXcd kl = twist_pair_operator(space, 1, 2);
  const Eigen::MatrixXcd lk = twist_pair_operator(space, 2, 1);
  REQUIRE((kl + lk).norm() < 1e-14);

  REQUIRE_THROWS_AS(eta_form(phi, 2, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(eta_form(canonical_spinor(2, 1), 1, 2), std::invalid_argument);

  // For a partially pure spinor the full Hermitian pairing behind eta is
  // real.
  const TwistedSpinor canon = canonical_spinor(2, 2);
  double imag_part = 0.0;
  for (int a = 1; a <= 6; ++a) {
    for (int b = a + 1; b <= 6; ++b) {
      const AntisymmetricForm w = AntisymmetricForm::wedge(6, {a - 1, b - 1});
      const TwistedSpinor acted = spin_form_apply(w, twist_pair_apply(1, 2, canon));
      imag_part = std::max(imag_part, std::abs(twisted_inner(acted, canon).imag()));
    }
  }
  REQUIRE(imag_part < 1e-12);
}

TEST_CASE("eta endomorphism convention", "[partially_pure]") {
  const SkewForm eta = wedge2(6, 2, 3);  // e_3 ^ e_4 in 1-based labels
  const Eigen::MatrixXd endo = eta_endo_matrix(eta);
  Eigen::VectorXd e3 = Eigen::VectorXd::Zero(6);
  e3[2] = 1.0;
  Eigen::VectorXd e4 = Eigen::VectorXd::Zero(6);
  e4[3] = 1.0;
  REQUIRE((endo * e3 - e4).norm() < 1e-15);
  REQUIRE((endo * e4 + e3).norm() < 1e-15);
  REQUIRE((endo + endo.transpose()).norm() < 1e-15);
  REQUIRE(eta_endo_matrix(SkewForm::Zero(6, 6)).norm() == 0.0);
}

TEST_CASE("annihilator subspaces", "[partially_pure]") {
  for (const auto& [m, r] : kGrid) {
    const TwistedSpinor phi = canonical_spinor(m, r);
    const AnnihilatorResult anni = annihilator_subspace(phi);
    INFO("m=" << m << " r=" << r);
    REQUIRE(anni.dim == m);
    REQUIRE_FALSE(anni.rank_ambiguous);
    REQUIRE(anni.isotropy_residual < 1e-10);
  }

  // Generic spinors have trivial annihilator once the module is large
  // enough; on R^5 with r = 1 the spin group is transitive on the unit
  // sphere of the 4-dimensional module, so every spinor is partially pure
  // with a 2-dimensional annihilator.
  Rng rng(19);
  for (const auto& [n, r, expected] :
       std::vector<std::tuple<int, int, int>>{{6, 2, 0}, {7, 3, 0}, {7, 1, 0}, {5, 1, 2}}) {
    const TwistedSpinor psi = random_unit(TwistedSpinorSpace(n, r), rng);
    INFO("n=" << n << " r=" << r);
    REQUIRE(annihilator_subspace(psi).dim == expected);
  }

  REQUIRE_THROWS_AS(annihilator_subspace(TwistedSpinor(TwistedSpinorSpace(6, 2))),
                    std::invalid_argument);

  // A singular value parked near the rank threshold raises the ambiguity
  // flag instead of silently resolving.
  TwistedSpinor near = canonical_spinor(2, 2);
  TwistedSpinor noise = random_unit(near.space, rng);
  near.coeffs += 1e-8 * noise.coeffs;
  near.coeffs /= near.norm();
  REQUIRE(annihilator_subspace(near).rank_ambiguous);
}

TEST_CASE("CR frame extraction", "[partially_pure]") {
  for (const auto& [m, r] : kGrid) {
    const int n = 2 * m + r;
    const CRFrame frame = extract_cr(canonical_spinor(m, r));
    INFO("m=" << m << " r=" << r);
    Eigen::MatrixXd v_expected = Eigen::MatrixXd::Zero(n, 2 * m);
    v_expected.topRows(2 * m).setIdentity();
    REQUIRE((frame.V * frame.V.transpose() - v_expected * v_expected.transpose()).norm() <
            1e-10);
    Eigen::MatrixXd c_expected = Eigen::MatrixXd::Zero(n, r);
    c_expected.bottomRows(r).setIdentity();
    REQUIRE((frame.complement * frame.complement.transpose() -
             c_expected * c_expected.transpose())
                .norm() < 1e-10);
    // J matches the block structure J(e_{2s-1}) = +e_{2s}, one global sign.
    Eigen::MatrixXd j_expected = Eigen::MatrixXd::Zero(n, n);
    j_expected.topLeftCorner(2 * m, 2 * m) = flag::standard_block_j(m);
    REQUIRE((frame.J_ambient - j_expected).norm() < 1e-10);
    REQUIRE((frame.J * frame.J + Eigen::MatrixXd::Identity(2 * m, 2 * m)).norm() < 1e-10);
    REQUIRE((frame.J.transpose() * frame.J - Eigen::MatrixXd::Identity(2 * m, 2 * m)).norm() <
            1e-10);
  }

  Rng rng(29);
  REQUIRE_THROWS_AS(extract_cr(random_unit(TwistedSpinorSpace(6, 2), rng)),
                    std::invalid_argument);
}

TEST_CASE("phase gauge invariance of extraction and purity", "[partially_pure]") {
  Rng rng(37);
  const TwistedSpinor phi = canonical_spinor(2, 2);
  const cplx z = rng.unit_complex();
  const TwistedSpinor rotated = phi * z;
  const PurityReport a = is_partially_pure(phi, 1e-12);
  const PurityReport b = is_partially_pure(rotated, 1e-12);
  REQUIRE(a.verdict);
  REQUIRE(b.verdict);
  REQUIRE(std::abs(a.eta_condition_residual - b.eta_condition_residual) < 1e-13);
  const CRFrame fa = extract_cr(phi);
  const CRFrame fb = extract_cr(rotated);
  REQUIRE((fa.V * fa.V.transpose() - fb.V * fb.V.transpose()).norm() < 1e-11);
  REQUIRE((fa.J_ambient - fb.J_ambient).norm() < 1e-11);
}

TEST_CASE("purity verdicts", "[partially_pure]") {
  for (const auto& [m, r] : kGrid) {
    const PurityReport report = is_partially_pure(canonical_spinor(m, r), 1e-12);
    INFO("m=" << m << " r=" << r);
    REQUIRE(report.verdict);
    REQUIRE(report.unit_norm_residual < 1e-12);
    REQUIRE(report.annihilator_dim == m);
    REQUIRE(report.eta_condition_residual < 1e-12);
    REQUIRE(report.theta_orthogonality_residual < 1e-12);
    REQUIRE(report.has_r4 == (r == 4));
    REQUIRE(report.r4_residual < 1e-12);
  }

  Rng rng(43);
  int failures = 0;
  for (int t = 0; t < 100; ++t) {
    if (!is_partially_pure(random_unit(TwistedSpinorSpace(6, 2), rng), 1e-10).verdict) {
      ++failures;
    }
  }
  REQUIRE(failures >= 99);

  // Zeroing a coefficient (and renormalizing) breaks purity.
  TwistedSpinor damaged = canonical_spinor(2, 3);
  Eigen::Index ti = 0, si = 0;
  double best = 0.0;
  for (Eigen::Index t = 0; t < damaged.coeffs.rows(); ++t)
    for (Eigen::Index s = 0; s < damaged.coeffs.cols(); ++s)
      if (std::abs(damaged.coeffs(t, s)) > best) {
        best = std::abs(damaged.coeffs(t, s));
        ti = t;
        si = s;
      }
  damaged.coeffs(ti, si) = 0.0;
  damaged.coeffs /= damaged.norm();
  REQUIRE_FALSE(is_partially_pure(damaged, 1e-10).verdict);
}

TEST_CASE("pairing identity along the CR distribution", "[partially_pure]") {
  // For X in V: Re< i X . phi, Y . phi > = -<JX, Y> |phi|^2.
  Rng rng(47);
  for (const auto& [m, r] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}}) {
    const int n = 2 * m + r;
    const TwistedSpinor phi = canonical_spinor(m, r);
    const CRFrame frame = extract_cr(phi);
    for (int t = 0; t < 10; ++t) {
      Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
      x.head(2 * m) = rng.unit_vector(2 * m);
      const Eigen::VectorXd y = rng.unit_vector(n);
      const cplx lhs = cplx(0, 1) * twisted_inner(spin_vector_apply(x, phi),
                                                  spin_vector_apply(y, phi));
      const double rhs = -(frame.J_ambient * x).dot(y);
      REQUIRE(lhs.real() == Catch::Approx(rhs).margin(1e-10));
    }
  }
}

TEST_CASE("xi vector", "[partially_pure]") {
  for (int m : {1, 2, 3}) {
    const int n = 2 * m + 1;
    const Eigen::VectorXd xi = xi_vector(canonical_spinor(m, 1));
    Eigen::VectorXd expected = Eigen::VectorXd::Zero(n);
    expected[n - 1] = xi_canonical_sign(m);
    REQUIRE((xi - expected).norm() < 1e-13);
    REQUIRE(std::abs(xi.norm() - 1.0) < 1e-13);
    // Orthogonal to the CR distribution.
    REQUIRE(xi.head(2 * m).norm() < 1e-13);
  }
  const TwistedSpinor zero(TwistedSpinorSpace(5, 1));
  REQUIRE(xi_vector(zero).norm() == 0.0);
}

TEST_CASE("so(r) span of the eta endomorphisms", "[partially_pure]") {
  for (const auto& [m, r] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {2, 4}}) {
    const TwistedSpinor phi = canonical_spinor(m, r);
    const SoSpanReport span = so_r_span_check(phi);
    INFO("m=" << m << " r=" << r);
    REQUIRE(span.rank == r * (r - 1) / 2);
    REQUIRE(span.closure_residual < 1e-10);
  }

  // Commutator table: for the canonical spinor the endomorphisms are the
  // generators of the complement block, so their brackets match the
  // so(r) pattern built from plain E-generators, with one global sign.
  const int m = 2, r = 3, n = 2 * m + r;
  const TwistedSpinor phi = canonical_spinor(m, r);
  auto endo = [&](int k, int l) { return eta_endo(phi, k, l); };
  auto oracle = [&](int k, int l) {
    return flag::e_generator(n, 2 * m + k - 1, 2 * m + l - 1);
  };
  for (int k = 1; k <= r; ++k)
    for (int l = k + 1; l <= r; ++l)
      REQUIRE((endo(k, l) - oracle(k, l)).norm() < 1e-12);
  const Eigen::MatrixXd lhs = endo(1, 2) * endo(1, 3) - endo(1, 3) * endo(1, 2);
  const Eigen::MatrixXd rhs = oracle(1, 2) * oracle(1, 3) - oracle(1, 3) * oracle(1, 2);
  REQUIRE((lhs - rhs).norm() < 1e-12);

  REQUIRE_THROWS_AS(so_r_span_check(canonical_spinor(2, 1)), std::invalid_argument);
}

TEST_CASE("equivariance of the CR frame under the twisted group", "[partially_pure]") {
  Rng rng(53);
  for (const auto& [m, r] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}}) {
    const int n = 2 * m + r;
    const TwistedSpinorSpace space(n, r);
    const TwistedSpinor phi = canonical_spinor(m, r);
    SpinCRElement el;
    el.g.n = n;
    for (int f = 0; f < 4; ++f) el.g.factors.push_back(rng.unit_vector(n));
    el.h.n = r;
    for (int f = 0; f < 2; ++f) el.h.factors.push_back(rng.unit_vector(r));
    el.z = rng.unit_complex();
    const TwistedSpinor moved = twisted_op_apply(twisted_rep(el, space), phi);
    REQUIRE(is_partially_pure(moved, 1e-10).verdict);
    const Eigen::MatrixXd rot = vector_rep(el.g);
    const CRFrame before = extract_cr(phi);
    const CRFrame after = extract_cr(moved);
    REQUIRE((after.V * after.V.transpose() -
             rot * before.V * before.V.transpose() * rot.transpose())
                .norm() < 1e-9);
    REQUIRE((after.J_ambient - rot * before.J_ambient * rot.transpose()).norm() < 1e-9);
  }
}

TEST_CASE("twisted spinor JSON round trip", "[partially_pure]") {
  Rng rng(61);
  const TwistedSpinorSpace space(6, 2);
  const TwistedSpinor phi = random_unit(space, rng);
  const TwistedSpinor back = twisted_spinor_from_json(to_json(phi));
  REQUIRE(back.space == space);
  REQUIRE((back.coeffs - phi.coeffs).norm() < 1e-15);

  const json j = to_json(is_partially_pure(canonical_spinor(2, 4), 1e-12));
  REQUIRE(j.contains("unit_norm_residual"));
  REQUIRE(j.contains("annihilator_dim"));
  REQUIRE(j.contains("eta_condition_residual"));
  REQUIRE(j.contains("theta_orthogonality_residual"));
  REQUIRE(j.contains("r4_residual"));
  REQUIRE(j["verdict"].get<bool>());
}
