#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace spinlab {

/// Antisymmetric real n x n coefficient array (degree-2 forms: the
/// eta_kl, Theta_kl and dA data all live here).
using SkewForm = Eigen::MatrixXd;

inline double skew_defect(const SkewForm& w) {
  return (w + w.transpose()).cwiseAbs().maxCoeff();
}

inline SkewForm wedge2(int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
    throw std::invalid_argument("wedge2: bad indices");
  }
  SkewForm w = SkewForm::Zero(n, n);
  w(i, j) = 1.0;
  w(j, i) = -1.0;
  return w;
}

inline SkewForm wedge2(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  if (x.size() != y.size()) throw std::invalid_argument("wedge2: dimension mismatch");
  return x * y.transpose() - y * x.transpose();
}

/// Dense fully antisymmetric degree-k coefficient array on R^n, stored as
/// a flat n^k table.  Degrees in use are small (k <= 4, n <= 12).
class AntisymmetricForm {
 public:
  AntisymmetricForm(int n, int degree)
      : n_(n), degree_(degree),
        data_(static_cast<std::size_t>(std::pow(double(n), double(degree))), 0.0) {
    if (n < 0 || degree < 0) throw std::invalid_argument("AntisymmetricForm: bad shape");
  }

  int n() const { return n_; }
  int degree() const { return degree_; }

  double& at(const std::vector<int>& idx) { return data_[flat(idx)]; }
  double at(const std::vector<int>& idx) const { return data_[flat(idx)]; }

  /// Set the component at a strictly increasing index tuple and fill in
  /// the full antisymmetric orbit.
  void set_increasing(const std::vector<int>& idx, double value) {
    std::vector<int> perm = idx;
    if (!std::is_sorted(perm.begin(), perm.end()) ||
        std::adjacent_find(perm.begin(), perm.end()) != perm.end()) {
      throw std::invalid_argument("set_increasing: indices must be strictly increasing");
    }
    std::sort(perm.begin(), perm.end());
    double sign = 1.0;
    do {
      data_[flat(perm)] = sign_of(perm, idx) * value;
    } while (std::next_permutation(perm.begin(), perm.end()));
    (void)sign;
  }

  static AntisymmetricForm wedge(int n, const std::vector<int>& idx) {
    AntisymmetricForm w(n, static_cast<int>(idx.size()));
    w.set_increasing(idx, 1.0);
    return w;
  }

  static AntisymmetricForm from_matrix(const SkewForm& m) {
    AntisymmetricForm w(static_cast<int>(m.rows()), 2);
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) {
        w.at({i, j}) = m(i, j);
      }
    }
    return w;
  }

  /// Max deviation from full antisymmetry (repeated indices must carry 0).
  double antisymmetry_defect() const {
    double defect = 0.0;
    std::vector<int> idx(static_cast<std::size_t>(degree_), 0);
    for (std::size_t flat_i = 0; flat_i < data_.size(); ++flat_i) {
      unflat(flat_i, idx);
      std::vector<int> sorted = idx;
      std::sort(sorted.begin(), sorted.end());
      const bool repeated =
          std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
      if (repeated) {
        defect = std::max(defect, std::abs(data_[flat_i]));
      } else {
        const double expected = sign_of(idx, sorted) * data_[flat(sorted)];
        defect = std::max(defect, std::abs(data_[flat_i] - expected));
      }
    }
    return defect;
  }

  /// Visit every strictly increasing index tuple with its coefficient.
  template <typename F>
  void for_each_increasing(F&& f) const {
    std::vector<int> idx(static_cast<std::size_t>(degree_));
    for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = static_cast<int>(j);
    if (degree_ == 0) {
      f(idx, data_.empty() ? 0.0 : data_[0]);
      return;
    }
    if (degree_ > n_) return;
    while (true) {
      f(idx, data_[flat(idx)]);
      int j = degree_ - 1;
      while (j >= 0 && idx[static_cast<std::size_t>(j)] == n_ - degree_ + j) --j;
      if (j < 0) break;
      ++idx[static_cast<std::size_t>(j)];
      for (int t = j + 1; t < degree_; ++t) {
        idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
      }
    }
  }

 private:
  std::size_t flat(const std::vector<int>& idx) const {
    std::size_t a = 0;
    for (int i : idx) {
      if (i < 0 || i >= n_) throw std::out_of_range("AntisymmetricForm: index");
      a = a * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i);
    }
    return a;
  }

  void unflat(std::size_t flat_i, std::vector<int>& idx) const {
    for (int j = degree_ - 1; j >= 0; --j) {
      idx[static_cast<std::size_t>(j)] = static_cast<int>(flat_i % static_cast<std::size_t>(n_));
      flat_i /= static_cast<std::size_t>(n_);
    }
  }

  // Sign of the permutation taking `from` to `to` (both index sets equal).
  static double sign_of(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> perm = from;
    double sign = 1.0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (perm[i] == to[i]) continue;
      for (std::size_t j = i + 1; j < perm.size(); ++j) {
        if (perm[j] == to[i]) {
          std::swap(perm[i], perm[j]);
          sign = -sign;
          break;
        }
      }
    }
    return sign;
  }

  int n_;
  int degree_;
  std::vector<double> data_;
};

}  // namespace spinlab
