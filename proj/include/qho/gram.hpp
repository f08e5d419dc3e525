#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace qho {

/// Whether two basis elements are parallel pointwise at sampled positions,
/// alongside whether their polarization angles coincide.
struct ParallelismEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  bool pointwise_parallel = false;
  bool equal_theta = false;
};

/// Real inner products among candidate basis states, together with the
/// closed-form prediction for the same entries.
struct GramMatrix {
  std::vector<std::string> labels;
  Eigen::MatrixXd entries;
  Eigen::MatrixXd closed_form;
  double time = 0.0;
  std::vector<ParallelismEntry> parallelism;

  std::size_t size() const { return labels.size(); }

  double max_deviation() const {
    if (entries.size() == 0) return 0.0;
    return (entries - closed_form).cwiseAbs().maxCoeff();
  }

  double max_offdiagonal() const {
    double worst = 0.0;
    for (Eigen::Index r = 0; r < entries.rows(); ++r) {
      for (Eigen::Index c = 0; c < entries.cols(); ++c) {
        if (r != c) worst = std::max(worst, std::abs(entries(r, c)));
      }
    }
    return worst;
  }

  double identity_deviation() const {
    if (entries.size() == 0) return 0.0;
    return (entries - Eigen::MatrixXd::Identity(entries.rows(), entries.cols())).cwiseAbs().maxCoeff();
  }

  double asymmetry() const {
    if (entries.size() == 0) return 0.0;
    return (entries - entries.transpose()).cwiseAbs().maxCoeff();
  }
};

}  // namespace qho
