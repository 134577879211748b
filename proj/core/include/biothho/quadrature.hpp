#pragma once

#include <vector>

#include "biothho/types.hpp"

namespace biothho {

/// Quadrature rule with 2D nodes. Face rules carry nodes lying on the face
/// segment; weights sum to the cell area (resp. face length).
struct QuadratureRule {
  Eigen::Matrix<double, Eigen::Dynamic, 2> points;
  VecX weights;
  int exactness = 0;

  std::size_t size() const { return static_cast<std::size_t>(weights.size()); }
  Vec2 point(std::size_t q) const { return points.row(q).transpose(); }
};

/// Gauss-Legendre nodes/weights on [0,1] (weights sum to 1).
void gauss_legendre(int npts, VecX& nodes, VecX& weights);

/// Gauss-Jacobi nodes/weights for the weight (1-x) on [0,1] (weights sum to 1/2).
void gauss_jacobi10(int npts, VecX& nodes, VecX& weights);

/// Conical-product rule on the triangle (a,b,c), exact for total degree <= exactness.
QuadratureRule triangle_quadrature(const Vec2& a, const Vec2& b, const Vec2& c, int exactness);

/// Rule on a star-shaped polygon obtained by fan-triangulating from `center`
/// (typically the centroid). Throws on degenerate (zero-area) input.
QuadratureRule polygon_quadrature(const std::vector<Vec2>& vertices, const Vec2& center,
                                  int exactness);

/// Gauss rule on the segment [a,b]; weights sum to |b-a|.
QuadratureRule segment_quadrature(const Vec2& a, const Vec2& b, int exactness);

}  // namespace biothho
