#include "biothho/mesh.hpp"

#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace biothho {

namespace {

double polygon_area(const std::vector<Vec2>& v) {
  double a = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2& p = v[i];
    const Vec2& q = v[(i + 1) % v.size()];
    a += p.x() * q.y() - q.x() * p.y();
  }
  return 0.5 * a;
}

Vec2 polygon_centroid(const std::vector<Vec2>& v, double area) {
  Vec2 c = Vec2::Zero();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2& p = v[i];
    const Vec2& q = v[(i + 1) % v.size()];
    const double cross = p.x() * q.y() - q.x() * p.y();
    c += cross * (p + q);
  }
  return c / (6.0 * area);
}

double triangle_inradius(const Vec2& a, const Vec2& b, const Vec2& c) {
  const double area = 0.5 * std::abs((b - a).x() * (c - a).y() - (b - a).y() * (c - a).x());
  const double per = (b - a).norm() + (c - b).norm() + (a - c).norm();
  return 2.0 * area / per;
}

}  // namespace

Mesh::Mesh(std::vector<Vec2> vertices, std::vector<std::vector<std::size_t>> cells)
    : vertices_(std::move(vertices)) {
  cells_.resize(cells.size());

  // Faces are created by the first incident cell, which becomes T1 and fixes
  // the orientation: n_F points out of T1.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> face_of;
  for (std::size_t iT = 0; iT < cells.size(); ++iT) {
    Cell& T = cells_[iT];
    T.vertex_ids = std::move(cells[iT]);
    const std::size_t ne = T.vertex_ids.size();
    if (ne < 3) throw std::invalid_argument("Mesh: cell with fewer than 3 vertices");
    T.face_ids.resize(ne);
    T.face_sign.resize(ne);
    for (std::size_t e = 0; e < ne; ++e) {
      const std::size_t va = T.vertex_ids[e];
      const std::size_t vb = T.vertex_ids[(e + 1) % ne];
      const auto key = std::minmax(va, vb);
      auto it = face_of.find(key);
      if (it == face_of.end()) {
        Face F;
        F.v = {va, vb};
        F.owner = static_cast<int>(iT);
        const Vec2 a = vertices_[va], b = vertices_[vb];
        F.measure = (b - a).norm();
        F.diameter = F.measure;
        F.midpoint = 0.5 * (a + b);
        // counter-clockwise loop: outward normal is the edge direction rotated by -pi/2
        const Vec2 d = (b - a) / F.measure;
        F.normal = Vec2(d.y(), -d.x());
        face_of.emplace(key, faces_.size());
        T.face_ids[e] = faces_.size();
        T.face_sign[e] = 1.0;
        faces_.push_back(F);
      } else {
        Face& F = faces_[it->second];
        if (F.neighbour >= 0) throw std::invalid_argument("Mesh: face with three incident cells");
        F.neighbour = static_cast<int>(iT);
        T.face_ids[e] = it->second;
        T.face_sign[e] = -1.0;
      }
    }

    const auto verts = [&] {
      std::vector<Vec2> v(ne);
      for (std::size_t i = 0; i < ne; ++i) v[i] = vertices_[T.vertex_ids[i]];
      return v;
    }();
    T.measure = polygon_area(verts);
    if (!(T.measure > 0.0)) throw std::invalid_argument("Mesh: non-positive cell area");
    T.centroid = polygon_centroid(verts, T.measure);
    T.diameter = 0.0;
    for (std::size_t i = 0; i < ne; ++i)
      for (std::size_t j = i + 1; j < ne; ++j)
        T.diameter = std::max(T.diameter, (verts[i] - verts[j]).norm());
    total_measure_ += T.measure;
    h_max_ = std::max(h_max_, T.diameter);
  }

  for (const Face& F : faces_)
    if (F.is_boundary()) ++n_boundary_;
}

std::vector<Vec2> Mesh::cell_vertices(std::size_t iT) const {
  const Cell& T = cells_[iT];
  std::vector<Vec2> v(T.vertex_ids.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = vertices_[T.vertex_ids[i]];
  return v;
}

Mesh build_trapezoidal_mesh(std::size_t n, double distortion) {
  if (n < 1) throw std::invalid_argument("build_trapezoidal_mesh: n < 1");
  if (distortion < 0.0 || distortion >= 0.45)
    throw std::invalid_argument("build_trapezoidal_mesh: distortion outside [0, 0.45)");

  const double h = 1.0 / static_cast<double>(n);
  std::vector<Vec2> vertices((n + 1) * (n + 1));
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t i = 0; i <= n; ++i) {
      double y = j * h;
      if (i >= 1 && i <= n - 1 && j >= 1 && j <= n - 1) {
        const double s = ((i + j) % 2 == 0) ? 1.0 : -1.0;
        y += s * distortion * h;
      }
      vertices[j * (n + 1) + i] = Vec2(i * h, y);
    }
  }
  std::vector<std::vector<std::size_t>> cells;
  cells.reserve(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t v00 = j * (n + 1) + i;
      cells.push_back({v00, v00 + 1, v00 + n + 2, v00 + n + 1});
    }
  }
  return Mesh(std::move(vertices), std::move(cells));
}

Mesh classify_boundary(Mesh mesh, BoundaryMode mode, double split_axis_value) {
  for (std::size_t iF = 0; iF < mesh.n_faces(); ++iF) {
    Face& F = mesh.face(iF);
    if (!F.is_boundary()) {
      F.uflag = UFlag::Interior;
      F.pflag = PFlag::Interior;
      continue;
    }
    if (mode == BoundaryMode::Homogeneous || F.midpoint.x() <= split_axis_value) {
      F.uflag = UFlag::Dirichlet;
      F.pflag = PFlag::Neumann;
    } else {
      F.uflag = UFlag::Neumann;
      F.pflag = PFlag::Dirichlet;
    }
  }
  return mesh;
}

double mesh_regularity(const Mesh& mesh) {
  double worst = std::numeric_limits<double>::max();
  for (std::size_t iT = 0; iT < mesh.n_cells(); ++iT) {
    const Cell& T = mesh.cell(iT);
    const auto verts = mesh.cell_vertices(iT);
    double best = 0.0;
    for (std::size_t e = 0; e < verts.size(); ++e) {
      const double r = triangle_inradius(T.centroid, verts[e], verts[(e + 1) % verts.size()]);
      best = std::max(best, r);
    }
    worst = std::min(worst, best / T.diameter);
  }
  return worst;
}

void write_mesh(const Mesh& mesh, std::ostream& out) {
  out.precision(17);
  out << "polymesh2d " << mesh.n_vertices() << " " << mesh.n_cells() << "\n";
  for (std::size_t i = 0; i < mesh.n_vertices(); ++i)
    out << mesh.vertex(i).x() << " " << mesh.vertex(i).y() << "\n";
  for (std::size_t iT = 0; iT < mesh.n_cells(); ++iT) {
    const Cell& T = mesh.cell(iT);
    out << T.vertex_ids.size();
    for (std::size_t v : T.vertex_ids) out << " " << v;
    out << "\n";
  }
}

Mesh read_mesh(std::istream& in) {
  std::string magic;
  std::size_t nv = 0, nc = 0;
  in >> magic >> nv >> nc;
  if (magic != "polymesh2d" || !in) throw std::invalid_argument("read_mesh: bad header");
  std::vector<Vec2> vertices(nv);
  for (std::size_t i = 0; i < nv; ++i) in >> vertices[i].x() >> vertices[i].y();
  std::vector<std::vector<std::size_t>> cells(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    std::size_t m = 0;
    in >> m;
    cells[c].resize(m);
    for (std::size_t i = 0; i < m; ++i) in >> cells[c][i];
  }
  if (!in) throw std::invalid_argument("read_mesh: truncated file");
  return Mesh(std::move(vertices), std::move(cells));
}

PermeabilityField PermeabilityField::isotropic(const Mesh& mesh, double kappa) {
  return uniform(mesh, kappa * Mat2::Identity());
}

PermeabilityField PermeabilityField::uniform(const Mesh& mesh, const Mat2& K) {
  Eigen::SelfAdjointEigenSolver<Mat2> es(K);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw std::invalid_argument("PermeabilityField: tensor not positive definite");
  PermeabilityField field;
  field.K.assign(mesh.n_cells(), K);
  field.k_max.assign(mesh.n_cells(), es.eigenvalues().maxCoeff());
  field.k_min.assign(mesh.n_cells(), es.eigenvalues().minCoeff());
  field.rho_T.assign(mesh.n_cells(), es.eigenvalues().maxCoeff() / es.eigenvalues().minCoeff());
  field.rho = field.rho_T.empty() ? 1.0 : field.rho_T.front();
  return field;
}

}  // namespace biothho
