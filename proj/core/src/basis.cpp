#include "biothho/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace biothho {

namespace {

// G = V diag(w) V^T restricted to the span of the rows of V.
MatX weighted_gram(const MatX& V, const VecX& w) {
  return V * w.asDiagonal() * V.transpose();
}

// One Cholesky pass: returns L^{-1} such that the transformed Gram is ~ I.
MatX inverse_cholesky(const MatX& G) {
  Eigen::LLT<MatX> llt(G);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("basis orthonormalisation: Gram matrix not positive definite");
  MatX L = llt.matrixL();
  return L.triangularView<Eigen::Lower>().solve(MatX::Identity(G.rows(), G.cols()));
}

}  // namespace

CellBasis::CellBasis(const Vec2& center, double h, int degree)
    : center_(center), h_(h), degree_(degree) {
  if (degree < 0) throw std::invalid_argument("CellBasis: negative degree");
  if (!(h > 0.0)) throw std::invalid_argument("CellBasis: non-positive scale");
  for (int d = 0; d <= degree; ++d)
    for (int a = d; a >= 0; --a) exponents_.push_back({a, d - a});
  transform_ = MatX::Identity(exponents_.size(), exponents_.size());
}

void CellBasis::orthonormalize(const QuadratureRule& qr) {
  for (int pass = 0; pass < 2; ++pass) {
    const MatX V = values_at(qr);
    transform_ = inverse_cholesky(weighted_gram(V, qr.weights)) * transform_;
    orthonormal_ = true;
  }
}

void CellBasis::eval_all(const Vec2& x, VecX& out) const {
  const double xi = (x.x() - center_.x()) / h_;
  const double eta = (x.y() - center_.y()) / h_;
  VecX raw(exponents_.size());
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    raw(i) = std::pow(xi, exponents_[i][0]) * std::pow(eta, exponents_[i][1]);
  out = transform_ * raw;
}

void CellBasis::grad_all(const Vec2& x, MatX& out) const {
  const double xi = (x.x() - center_.x()) / h_;
  const double eta = (x.y() - center_.y()) / h_;
  MatX raw(exponents_.size(), 2);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    const int a = exponents_[i][0], b = exponents_[i][1];
    raw(i, 0) = (a > 0) ? a * std::pow(xi, a - 1) * std::pow(eta, b) / h_ : 0.0;
    raw(i, 1) = (b > 0) ? b * std::pow(xi, a) * std::pow(eta, b - 1) / h_ : 0.0;
  }
  out = transform_ * raw;
}

void CellBasis::hess_all(const Vec2& x, MatX& out) const {
  const double xi = (x.x() - center_.x()) / h_;
  const double eta = (x.y() - center_.y()) / h_;
  const double h2 = h_ * h_;
  MatX raw(exponents_.size(), 3);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    const int a = exponents_[i][0], b = exponents_[i][1];
    raw(i, 0) = (a > 1) ? a * (a - 1) * std::pow(xi, a - 2) * std::pow(eta, b) / h2 : 0.0;
    raw(i, 1) = (a > 0 && b > 0) ? a * b * std::pow(xi, a - 1) * std::pow(eta, b - 1) / h2 : 0.0;
    raw(i, 2) = (b > 1) ? b * (b - 1) * std::pow(xi, a) * std::pow(eta, b - 2) / h2 : 0.0;
  }
  out = transform_ * raw;
}

MatX CellBasis::values_at(const QuadratureRule& qr) const {
  MatX vals(size(), qr.size());
  VecX tmp;
  for (std::size_t q = 0; q < qr.size(); ++q) {
    eval_all(qr.point(q), tmp);
    vals.col(q) = tmp;
  }
  return vals;
}

void CellBasis::gradients_at(const QuadratureRule& qr, MatX& gx, MatX& gy) const {
  gx.resize(size(), qr.size());
  gy.resize(size(), qr.size());
  MatX tmp;
  for (std::size_t q = 0; q < qr.size(); ++q) {
    grad_all(qr.point(q), tmp);
    gx.col(q) = tmp.col(0);
    gy.col(q) = tmp.col(1);
  }
}

void CellBasis::hessians_at(const QuadratureRule& qr, MatX& hxx, MatX& hxy, MatX& hyy) const {
  hxx.resize(size(), qr.size());
  hxy.resize(size(), qr.size());
  hyy.resize(size(), qr.size());
  MatX tmp;
  for (std::size_t q = 0; q < qr.size(); ++q) {
    hess_all(qr.point(q), tmp);
    hxx.col(q) = tmp.col(0);
    hxy.col(q) = tmp.col(1);
    hyy.col(q) = tmp.col(2);
  }
}

FaceBasis::FaceBasis(const Vec2& a, const Vec2& b, int degree)
    : midpoint_(0.5 * (a + b)), h_((b - a).norm()), degree_(degree) {
  if (degree < 0) throw std::invalid_argument("FaceBasis: negative degree");
  if (!(h_ > 0.0)) throw std::invalid_argument("FaceBasis: degenerate face");
  tangent_ = (b - a) / h_;
  transform_ = MatX::Identity(size(), size());
}

void FaceBasis::orthonormalize(const QuadratureRule& qr) {
  for (int pass = 0; pass < 2; ++pass) {
    const MatX V = values_at(qr);
    transform_ = inverse_cholesky(weighted_gram(V, qr.weights)) * transform_;
    orthonormal_ = true;
  }
}

void FaceBasis::eval_all(const Vec2& x, VecX& out) const {
  const double s = (x - midpoint_).dot(tangent_) / h_;
  VecX raw(size());
  double p = 1.0;
  for (std::size_t i = 0; i < size(); ++i) {
    raw(i) = p;
    p *= s;
  }
  out = transform_ * raw;
}

MatX FaceBasis::values_at(const QuadratureRule& qr) const {
  MatX vals(size(), qr.size());
  VecX tmp;
  for (std::size_t q = 0; q < qr.size(); ++q) {
    eval_all(qr.point(q), tmp);
    vals.col(q) = tmp;
  }
  return vals;
}

template <class Basis>
VecX l2_project(const std::function<double(const Vec2&)>& f, const Basis& basis,
                const QuadratureRule& qr) {
  const MatX V = basis.values_at(qr);
  VecX fw(qr.size());
  for (std::size_t q = 0; q < qr.size(); ++q) fw(q) = f(qr.point(q)) * qr.weights(q);
  const VecX moments = V * fw;
  if (basis.orthonormal()) return moments;
  const MatX G = weighted_gram(V, qr.weights);
  Eigen::LDLT<MatX> ldlt(G);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive())
    throw std::runtime_error("l2_project: singular Gram matrix");
  return ldlt.solve(moments);
}

template <class Basis>
MatX mass_gram(const Basis& basis, const QuadratureRule& qr) {
  return weighted_gram(basis.values_at(qr), qr.weights);
}

MatX stiffness_gram(const CellBasis& basis, const QuadratureRule& qr, const Mat2& K) {
  MatX gx, gy;
  basis.gradients_at(qr, gx, gy);
  const MatX kgx = K(0, 0) * gx + K(0, 1) * gy;
  const MatX kgy = K(1, 0) * gx + K(1, 1) * gy;
  MatX S = kgx * qr.weights.asDiagonal() * gx.transpose() +
           kgy * qr.weights.asDiagonal() * gy.transpose();
  return 0.5 * (S + S.transpose());
}

template VecX l2_project<CellBasis>(const std::function<double(const Vec2&)>&, const CellBasis&,
                                    const QuadratureRule&);
template VecX l2_project<FaceBasis>(const std::function<double(const Vec2&)>&, const FaceBasis&,
                                    const QuadratureRule&);
template MatX mass_gram<CellBasis>(const CellBasis&, const QuadratureRule&);
template MatX mass_gram<FaceBasis>(const FaceBasis&, const QuadratureRule&);

}  // namespace biothho
