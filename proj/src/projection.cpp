#include <Eigen/Dense>

#include <algorithm>
#include <stdexcept>

#include "cohkit/coherence.hpp"

namespace cohkit {

// Wolfe's min-norm-point iteration on the translated points y_h = Q_h - p.
std::vector<double> project_onto_hull(const std::vector<std::vector<double>>& points,
                                      const std::vector<double>& p) {
  if (points.empty()) throw std::invalid_argument("project_onto_hull: no points");
  const Eigen::Index d = static_cast<Eigen::Index>(p.size());
  const Eigen::Index m = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd y(d, m);
  for (Eigen::Index h = 0; h < m; ++h)
    for (Eigen::Index i = 0; i < d; ++i) y(i, h) = points[h][i] - p[i];

  double scale = 0;
  Eigen::Index first = 0;
  for (Eigen::Index h = 0; h < m; ++h) {
    double n2 = y.col(h).squaredNorm();
    scale = std::max(scale, n2);
    if (n2 < y.col(first).squaredNorm()) first = h;
  }
  const double z1 = 1e-14 * std::max(scale, 1.0), z2 = 1e-12;

  std::vector<Eigen::Index> active{first};
  std::vector<double> w{1.0};
  Eigen::VectorXd x = y.col(first);

  for (int major = 0; major < 1000; ++major) {
    Eigen::Index j = 0;
    (y.transpose() * x).minCoeff(&j);
    if (x.dot(y.col(j)) > x.squaredNorm() - z1) break;
    if (std::find(active.begin(), active.end(), j) != active.end()) break;
    active.push_back(j);
    w.push_back(0.0);

    for (int minor = 0; minor < 1000; ++minor) {
      const Eigen::Index k = static_cast<Eigen::Index>(active.size());
      Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(k + 1, k + 1);
      for (Eigen::Index a = 0; a < k; ++a) {
        for (Eigen::Index b = 0; b < k; ++b) sys(a, b) = y.col(active[a]).dot(y.col(active[b]));
        sys(a, k) = sys(k, a) = 1.0;
      }
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
      rhs(k) = 1.0;
      Eigen::VectorXd v = sys.completeOrthogonalDecomposition().solve(rhs);

      bool interior = true;
      for (Eigen::Index a = 0; a < k; ++a) interior = interior && v(a) > z2;
      if (interior) {
        for (Eigen::Index a = 0; a < k; ++a) w[a] = v(a);
        break;
      }
      double theta = 1.0;
      for (Eigen::Index a = 0; a < k; ++a)
        if (v(a) <= z2 && w[a] - v(a) > 0) theta = std::min(theta, w[a] / (w[a] - v(a)));
      for (Eigen::Index a = 0; a < k; ++a) w[a] = theta * v(a) + (1 - theta) * w[a];
      std::vector<Eigen::Index> keep_idx;
      std::vector<double> keep_w;
      for (Eigen::Index a = 0; a < k; ++a) {
        if (w[a] > z2) {
          keep_idx.push_back(active[a]);
          keep_w.push_back(w[a]);
        }
      }
      if (keep_idx.empty()) {
        keep_idx.push_back(active.back());
        keep_w.push_back(1.0);
      }
      active = std::move(keep_idx);
      w = std::move(keep_w);
    }
    x.setZero();
    double total = 0;
    for (double c : w) total += c;
    for (std::size_t a = 0; a < active.size(); ++a) x += (w[a] / total) * y.col(active[a]);
  }

  std::vector<double> out(p.size());
  for (Eigen::Index i = 0; i < d; ++i) out[i] = p[i] + x(i);
  return out;
}

}  // namespace cohkit
