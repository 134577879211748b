#pragma once

#include <cstddef>
#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace biothho {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using VecX = Eigen::VectorXd;
using MatX = Eigen::MatrixXd;
using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

/// dim P^l(T) for a two-dimensional cell T
inline constexpr std::size_t cell_poly_dim(int l) {
  return static_cast<std::size_t>((l + 1) * (l + 2) / 2);
}

/// dim P^l(F) for a one-dimensional face F
inline constexpr std::size_t face_poly_dim(int l) {
  return static_cast<std::size_t>(l + 1);
}

}  // namespace biothho
