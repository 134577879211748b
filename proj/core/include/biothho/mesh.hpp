#pragma once

#include <array>
#include <iosfwd>
#include <limits>
#include <vector>

#include "biothho/types.hpp"

namespace biothho {

/// Boundary condition carried by a face for the displacement unknowns.
enum class UFlag { Interior, Dirichlet, Neumann };
/// Boundary condition carried by a face for the pore pressure unknowns.
enum class PFlag { Interior, Dirichlet, Neumann };

struct Face {
  std::array<std::size_t, 2> v;  ///< endpoints, oriented by the owner cell
  int owner = -1;                ///< T1
  int neighbour = -1;            ///< T2, or -1 on the boundary
  double measure = 0.0;          ///< length |F|
  double diameter = 0.0;         ///< h_F (= |F| for a straight face)
  Vec2 midpoint = Vec2::Zero();
  Vec2 normal = Vec2::Zero();    ///< n_F, pointing out of the owner T1
  UFlag uflag = UFlag::Interior;
  PFlag pflag = PFlag::Interior;

  bool is_boundary() const { return neighbour < 0; }
};

struct Cell {
  std::vector<std::size_t> vertex_ids;  ///< counter-clockwise loop
  std::vector<std::size_t> face_ids;    ///< face_ids[e] joins vertex e to e+1
  std::vector<double> face_sign;        ///< +1 if n_F == n_TF, -1 otherwise
  double measure = 0.0;                 ///< |T|
  double diameter = 0.0;                ///< h_T
  Vec2 centroid = Vec2::Zero();
};

/// Polygonal mesh of a 2D domain. Immutable after construction apart from the
/// boundary flags, which classify_boundary() sets on a copy.
class Mesh {
 public:
  Mesh(std::vector<Vec2> vertices, std::vector<std::vector<std::size_t>> cells);

  std::size_t n_vertices() const { return vertices_.size(); }
  std::size_t n_cells() const { return cells_.size(); }
  std::size_t n_faces() const { return faces_.size(); }
  std::size_t n_boundary_faces() const { return n_boundary_; }

  const Vec2& vertex(std::size_t i) const { return vertices_[i]; }
  const Cell& cell(std::size_t i) const { return cells_[i]; }
  const Face& face(std::size_t i) const { return faces_[i]; }
  Face& face(std::size_t i) { return faces_[i]; }

  /// Outward unit normal n_TF of local face `le` of cell `iT`.
  Vec2 normal_TF(std::size_t iT, std::size_t le) const {
    const Cell& T = cells_[iT];
    return T.face_sign[le] * faces_[T.face_ids[le]].normal;
  }

  /// Vertex loop of a cell as coordinates.
  std::vector<Vec2> cell_vertices(std::size_t iT) const;

  double h_max() const { return h_max_; }
  double total_measure() const { return total_measure_; }

 private:
  std::vector<Vec2> vertices_;
  std::vector<Cell> cells_;
  std::vector<Face> faces_;
  std::size_t n_boundary_ = 0;
  double h_max_ = 0.0;
  double total_measure_ = 0.0;
};

enum class BoundaryMode {
  Mixed,       ///< Dirichlet-u/Neumann-p for x1 <= split, Neumann-u/Dirichlet-p otherwise
  Homogeneous  ///< clamped and impermeable everywhere: Dirichlet-u, Neumann-p
};

/// Trapezoidal mesh family on the unit square: n x n quadrilaterals whose
/// interior vertices are shifted vertically by +/- distortion/n in a
/// checkerboard pattern, so every cell is a trapezoid with vertical parallel
/// sides. distortion = 0 gives the uniform Cartesian grid.
Mesh build_trapezoidal_mesh(std::size_t n, double distortion = 0.0);

/// Returns a copy of the mesh with boundary flags assigned.
Mesh classify_boundary(Mesh mesh, BoundaryMode mode, double split_axis_value = 0.5);

/// Shape-regularity diagnostic: min over cells of the largest inscribed
/// fan-triangle inradius divided by h_T. Strictly positive on valid meshes.
double mesh_regularity(const Mesh& mesh);

/// Plain-text dump: "polymesh2d <nv> <nc>", vertices "x y", cells "m i1 .. im".
void write_mesh(const Mesh& mesh, std::ostream& out);
/// Load a polymesh2d dump; faces and topology are rebuilt.
Mesh read_mesh(std::istream& in);

/// Cell-wise constant SPD permeability with cached spectral bounds.
struct PermeabilityField {
  std::vector<Mat2> K;        ///< one tensor per cell
  std::vector<double> k_max;  ///< largest eigenvalue per cell
  std::vector<double> k_min;  ///< smallest eigenvalue per cell
  std::vector<double> rho_T;  ///< local anisotropy ratio k_max/k_min
  double rho = 1.0;           ///< global anisotropy ratio

  static PermeabilityField isotropic(const Mesh& mesh, double kappa);
  static PermeabilityField uniform(const Mesh& mesh, const Mat2& K);

  /// kappa_{TF} = K_T n_TF . n_TF
  double kappa_TF(std::size_t iT, const Vec2& n_TF) const {
    return n_TF.dot(K[iT] * n_TF);
  }
};

}  // namespace biothho
