#include "biothho/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace biothho {

namespace {

// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix of the
// three-term recurrence, weights mu0 * (first eigenvector component)^2.
void golub_welsch(const VecX& alpha, const VecX& beta, double mu0, VecX& nodes, VecX& weights) {
  const int n = static_cast<int>(alpha.size());
  MatX J = MatX::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    J(i, i) = alpha(i);
    if (i + 1 < n) {
      const double b = std::sqrt(beta(i + 1));
      J(i, i + 1) = b;
      J(i + 1, i) = b;
    }
  }
  Eigen::SelfAdjointEigenSolver<MatX> es(J);
  nodes = es.eigenvalues();
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double v0 = es.eigenvectors()(0, i);
    weights(i) = mu0 * v0 * v0;
  }
}

struct Rule1d {
  VecX nodes, weights;
};

const Rule1d& cached_legendre(int npts) {
  static std::map<int, Rule1d> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(npts);
  if (it != cache.end()) return it->second;
  // Legendre on [-1,1]: alpha_k = 0, beta_k = k^2/(4k^2-1), mu0 = 2.
  VecX alpha = VecX::Zero(npts), beta = VecX::Zero(npts);
  for (int k = 1; k < npts; ++k) beta(k) = k * k / (4.0 * k * k - 1.0);
  Rule1d r;
  golub_welsch(alpha, beta, 2.0, r.nodes, r.weights);
  // map to [0,1]
  r.nodes = (r.nodes.array() + 1.0) / 2.0;
  r.weights /= 2.0;
  return cache.emplace(npts, std::move(r)).first->second;
}

const Rule1d& cached_jacobi10(int npts) {
  static std::map<int, Rule1d> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(npts);
  if (it != cache.end()) return it->second;
  // Jacobi weight (1-x)^a (1+x)^b on [-1,1] with a=1, b=0, mu0 = 2.
  const double a = 1.0, b = 0.0;
  VecX alpha(npts), beta = VecX::Zero(npts);
  for (int k = 0; k < npts; ++k) {
    const double den = (2.0 * k + a + b) * (2.0 * k + a + b + 2.0);
    alpha(k) = (den != 0.0) ? (b * b - a * a) / den : (b - a) / (a + b + 2.0);
  }
  for (int k = 1; k < npts; ++k) {
    const double s = 2.0 * k + a + b;
    beta(k) = 4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1.0) * (s - 1.0));
  }
  Rule1d r;
  golub_welsch(alpha, beta, 2.0, r.nodes, r.weights);
  // map to [0,1] with weight (1-x): int_0^1 g(s)(1-s) ds = 1/4 int_{-1}^1 g((x+1)/2)(1-x) dx
  r.nodes = (r.nodes.array() + 1.0) / 2.0;
  r.weights /= 4.0;
  return cache.emplace(npts, std::move(r)).first->second;
}

}  // namespace

void gauss_legendre(int npts, VecX& nodes, VecX& weights) {
  if (npts < 1) throw std::invalid_argument("gauss_legendre: npts < 1");
  const Rule1d& r = cached_legendre(npts);
  nodes = r.nodes;
  weights = r.weights;
}

void gauss_jacobi10(int npts, VecX& nodes, VecX& weights) {
  if (npts < 1) throw std::invalid_argument("gauss_jacobi10: npts < 1");
  const Rule1d& r = cached_jacobi10(npts);
  nodes = r.nodes;
  weights = r.weights;
}

QuadratureRule triangle_quadrature(const Vec2& a, const Vec2& b, const Vec2& c, int exactness) {
  // Conical product on the reference triangle {xi,eta >= 0, xi+eta <= 1}:
  //   x = xi, y = eta (1 - xi), Jacobian (1 - xi).
  // Gauss-Jacobi (weight 1-xi) x Gauss-Legendre, m points each, exact for 2m-1.
  const int m = std::max(1, (exactness + 2) / 2);
  const Rule1d& gj = cached_jacobi10(m);
  const Rule1d& gl = cached_legendre(m);

  const double area2 = (b - a).x() * (c - a).y() - (b - a).y() * (c - a).x();
  QuadratureRule rule;
  rule.exactness = 2 * m - 1;
  rule.points.resize(m * m, 2);
  rule.weights.resize(m * m);
  int idx = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const double xi = gj.nodes(i);
      const double eta = gl.nodes(j) * (1.0 - xi);
      const Vec2 x = a + xi * (b - a) + eta * (c - a);
      rule.points.row(idx) = x.transpose();
      rule.weights(idx) = area2 * gj.weights(i) * gl.weights(j);
      ++idx;
    }
  }
  return rule;
}

QuadratureRule polygon_quadrature(const std::vector<Vec2>& vertices, const Vec2& center,
                                  int exactness) {
  const std::size_t nv = vertices.size();
  if (nv < 3) throw std::invalid_argument("polygon_quadrature: fewer than 3 vertices");
  std::vector<QuadratureRule> parts;
  parts.reserve(nv);
  double total_area = 0.0;
  std::size_t npts = 0;
  for (std::size_t e = 0; e < nv; ++e) {
    parts.push_back(
        triangle_quadrature(center, vertices[e], vertices[(e + 1) % nv], exactness));
    total_area += parts.back().weights.sum();
    npts += parts.back().size();
  }
  if (!(total_area > 0.0)) throw std::invalid_argument("polygon_quadrature: degenerate cell");

  QuadratureRule rule;
  rule.exactness = parts.front().exactness;
  rule.points.resize(npts, 2);
  rule.weights.resize(npts);
  std::size_t off = 0;
  for (const auto& part : parts) {
    rule.points.middleRows(off, part.size()) = part.points;
    rule.weights.segment(off, part.size()) = part.weights;
    off += part.size();
  }
  return rule;
}

QuadratureRule segment_quadrature(const Vec2& a, const Vec2& b, int exactness) {
  const int m = std::max(1, (exactness + 2) / 2);
  const Rule1d& gl = cached_legendre(m);
  const double len = (b - a).norm();
  QuadratureRule rule;
  rule.exactness = 2 * m - 1;
  rule.points.resize(m, 2);
  rule.weights.resize(m);
  for (int i = 0; i < m; ++i) {
    rule.points.row(i) = (a + gl.nodes(i) * (b - a)).transpose();
    rule.weights(i) = len * gl.weights(i);
  }
  return rule;
}

}  // namespace biothho
