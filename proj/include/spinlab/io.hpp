#pragma once

#include <json.hpp>

#include "spinlab/partially_pure.hpp"
#include "spinlab/spinor.hpp"
#include "spinlab/torus.hpp"
#include "spinlab/twisted_spinor.hpp"

namespace spinlab {

using json = nlohmann::ordered_json;

/// {"n": int, "coeffs": [[re, im], ...]}, coefficients ordered by the
/// multi-index (eps_1, ..., eps_k) lexicographically with +1 < -1.
inline json to_json(const Spinor& psi) {
  json j;
  j["n"] = psi.space.n;
  json coeffs = json::array();
  for (Eigen::Index i = 0; i < psi.coeffs.size(); ++i) {
    coeffs.push_back({psi.coeffs[i].real(), psi.coeffs[i].imag()});
  }
  j["coeffs"] = coeffs;
  return j;
}

inline Spinor spinor_from_json(const json& j) {
  const SpinorSpace space(j.at("n").get<int>());
  Eigen::VectorXcd c(space.dim());
  const auto& coeffs = j.at("coeffs");
  if (static_cast<Eigen::Index>(coeffs.size()) != space.dim()) {
    throw std::invalid_argument("spinor_from_json: coefficient count mismatch");
  }
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    c[i] = cplx(coeffs[static_cast<std::size_t>(i)][0].get<double>(),
                coeffs[static_cast<std::size_t>(i)][1].get<double>());
  }
  return Spinor(space, std::move(c));
}

/// {"n": int, "r": int, "coeffs": [[[re, im], ...] per twist index]}.
inline json to_json(const TwistedSpinor& phi) {
  json j;
  j["n"] = phi.space.n;
  j["r"] = phi.space.r;
  json rows = json::array();
  for (Eigen::Index t = 0; t < phi.coeffs.rows(); ++t) {
    json row = json::array();
    for (Eigen::Index s = 0; s < phi.coeffs.cols(); ++s) {
      row.push_back({phi.coeffs(t, s).real(), phi.coeffs(t, s).imag()});
    }
    rows.push_back(row);
  }
  j["coeffs"] = rows;
  return j;
}

inline TwistedSpinor twisted_spinor_from_json(const json& j) {
  const TwistedSpinorSpace space(j.at("n").get<int>(), j.at("r").get<int>());
  TwistedSpinor phi(space);
  const auto& rows = j.at("coeffs");
  if (static_cast<Eigen::Index>(rows.size()) != space.sigma_dim()) {
    throw std::invalid_argument("twisted_spinor_from_json: twist index count mismatch");
  }
  for (Eigen::Index t = 0; t < phi.coeffs.rows(); ++t) {
    const auto& row = rows[static_cast<std::size_t>(t)];
    if (static_cast<Eigen::Index>(row.size()) != space.spin_dim()) {
      throw std::invalid_argument("twisted_spinor_from_json: spin index count mismatch");
    }
    for (Eigen::Index s = 0; s < phi.coeffs.cols(); ++s) {
      phi.coeffs(t, s) = cplx(row[static_cast<std::size_t>(s)][0].get<double>(),
                              row[static_cast<std::size_t>(s)][1].get<double>());
    }
  }
  return phi;
}

inline json to_json(const PurityReport& report) {
  json j;
  j["unit_norm_residual"] = report.unit_norm_residual;
  j["annihilator_dim"] = report.annihilator_dim;
  j["eta_condition_residual"] = report.eta_condition_residual;
  j["theta_orthogonality_residual"] = report.theta_orthogonality_residual;
  if (report.has_r4) j["r4_residual"] = report.r4_residual;
  j["verdict"] = report.verdict;
  return j;
}

/// {"n", "r", "a", "K", "eigenvalues": [{"value", "multiplicity"}]},
/// ascending by value then multiplicity.
inline json spectrum_to_json(const TorusModel& model) {
  auto lines = dirac_spectrum(model);
  std::sort(lines.begin(), lines.end(), [](const SpectrumLine& a, const SpectrumLine& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.multiplicity < b.multiplicity;
  });
  json j;
  j["n"] = model.n;
  j["r"] = model.r;
  json a = json::array();
  for (Eigen::Index i = 0; i < model.holonomy.size(); ++i) a.push_back(model.holonomy[i]);
  j["a"] = a;
  j["K"] = model.mode_cutoff;
  json eig = json::array();
  for (const auto& line : lines) {
    eig.push_back({{"value", line.value}, {"multiplicity", line.multiplicity}});
  }
  j["eigenvalues"] = eig;
  return j;
}

}  // namespace spinlab
