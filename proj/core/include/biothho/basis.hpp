#pragma once

#include <functional>
#include <vector>

#include "biothho/quadrature.hpp"
#include "biothho/types.hpp"

namespace biothho {

/// Scaled monomial basis of P^l(T): m_i(x) = xi^a eta^b with (xi,eta) = (x-x_T)/h_T,
/// in graded order so that the leading dim P^j functions span P^j for every j <= l.
/// An optional orthonormalisation replaces the m_i by L^2(T)-orthonormal
/// combinations; the transform is lower-triangular, which keeps spans nested.
class CellBasis {
 public:
  CellBasis(const Vec2& center, double h, int degree);

  /// Two-pass Cholesky orthonormalisation against the given rule (exactness >= 2*degree).
  void orthonormalize(const QuadratureRule& qr);

  int degree() const { return degree_; }
  std::size_t size() const { return exponents_.size(); }
  bool orthonormal() const { return orthonormal_; }
  const Vec2& center() const { return center_; }
  double scale() const { return h_; }

  void eval_all(const Vec2& x, VecX& out) const;
  void grad_all(const Vec2& x, MatX& out) const;  ///< size x 2
  void hess_all(const Vec2& x, MatX& out) const;  ///< size x 3: (dxx, dxy, dyy)

  /// Values of all functions at the rule nodes, as a (size x npts) matrix.
  MatX values_at(const QuadratureRule& qr) const;
  /// Gradient components at the rule nodes, each (size x npts).
  void gradients_at(const QuadratureRule& qr, MatX& gx, MatX& gy) const;
  void hessians_at(const QuadratureRule& qr, MatX& hxx, MatX& hxy, MatX& hyy) const;

 private:
  Vec2 center_;
  double h_;
  int degree_;
  std::vector<std::array<int, 2>> exponents_;
  bool orthonormal_ = false;
  MatX transform_;  // row i: coefficients of basis function i on the raw monomials
};

/// Scaled monomial basis of P^l(F) in the arc-length coordinate
/// s = (x - x_F).t_F / h_F, optionally orthonormalised on F.
class FaceBasis {
 public:
  FaceBasis(const Vec2& a, const Vec2& b, int degree);

  void orthonormalize(const QuadratureRule& qr);

  int degree() const { return degree_; }
  std::size_t size() const { return static_cast<std::size_t>(degree_) + 1; }
  bool orthonormal() const { return orthonormal_; }

  void eval_all(const Vec2& x, VecX& out) const;
  MatX values_at(const QuadratureRule& qr) const;

 private:
  Vec2 midpoint_;
  Vec2 tangent_;
  double h_;
  int degree_;
  bool orthonormal_ = false;
  MatX transform_;
};

/// L^2 projection of f on the basis span; coefficients are returned in the
/// basis ordering. Throws if the Gram matrix is numerically singular.
template <class Basis>
VecX l2_project(const std::function<double(const Vec2&)>& f, const Basis& basis,
                const QuadratureRule& qr);

/// Mass Gram matrix (phi_i, phi_j) under the rule.
template <class Basis>
MatX mass_gram(const Basis& basis, const QuadratureRule& qr);

/// Stiffness Gram matrix (K grad phi_i, grad phi_j) for a cell basis.
MatX stiffness_gram(const CellBasis& basis, const QuadratureRule& qr, const Mat2& K);

/// Evaluate the polynomial with the given coefficients at x.
template <class Basis>
double eval_poly(const VecX& coeffs, const Basis& basis, const Vec2& x) {
  VecX vals;
  basis.eval_all(x, vals);
  return coeffs.dot(vals);
}

extern template VecX l2_project<CellBasis>(const std::function<double(const Vec2&)>&,
                                           const CellBasis&, const QuadratureRule&);
extern template VecX l2_project<FaceBasis>(const std::function<double(const Vec2&)>&,
                                           const FaceBasis&, const QuadratureRule&);
extern template MatX mass_gram<CellBasis>(const CellBasis&, const QuadratureRule&);
extern template MatX mass_gram<FaceBasis>(const FaceBasis&, const QuadratureRule&);

}  // namespace biothho
