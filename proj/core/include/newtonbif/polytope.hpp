// Lattice polytopes: exact convex hull, full face lattice, supporting faces,
// normal fans, intrinsic lattice bases and normalized volumes.
#pragma once

#include <newtonbif/cone.hpp>
#include <newtonbif/poly.hpp>

#include <optional>
#include <vector>

namespace nbif {

struct FaceDescriptor {
  // sorted indices into the polytope vertex list; empty for the empty face
  std::vector<int> vertex_indices;
  int dim = -1;
  bool contains_origin = false;
  // integer functional attaining its minimum over the polytope exactly on
  // this face (zero functional for the whole polytope; unused for the empty
  // face)
  ZVec support_normal;
  Integer support_offset{0};
};

class LatticePolytope {
 public:
  // Hull of a finite lattice point set (duplicates welcome).  Exact; the
  // vertex list is exactly the set of extreme points.
  static LatticePolytope convex_hull(const std::vector<Exponent>& points, int ambient_dim);

  int ambient_dim() const { return n_; }
  int dim() const { return dim_; }
  const std::vector<Exponent>& vertices() const { return vertices_; }

  // All faces including the empty face and the polytope itself, sorted by
  // (dim, vertex set).
  const std::vector<FaceDescriptor>& faces() const { return faces_; }
  int whole_face_index() const { return whole_face_; }
  const FaceDescriptor& whole_face() const { return faces_[whole_face_]; }

  // facet inequalities offset + normal.x >= 0 and affine hull equations
  // offset + normal.x = 0
  const std::vector<std::pair<Integer, ZVec>>& facet_inequalities() const { return facets_; }
  const std::vector<std::pair<Integer, ZVec>>& affine_hull_equations() const { return hull_eqs_; }

  bool contains_point(const Exponent& pt) const;
  bool face_contains_point(const FaceDescriptor& f, const Exponent& pt) const;

  // argmin face of the linear functional u
  int supporting_face_index(const ZVec& u) const;
  const FaceDescriptor& supporting_face(const ZVec& u) const;

  std::optional<int> face_index_of(const std::vector<int>& sorted_vertex_indices) const;

  // Saturated lattice basis of the direction space of the face's affine
  // span; every lattice point difference inside the face is an integer
  // combination of it.  Precondition: dim(face) >= 1.
  std::vector<Exponent> face_span_basis(const FaceDescriptor& f) const;

  // Intrinsic normalized volume (d! times the Euclidean volume in the
  // induced lattice of the affine span); 1 for a point.
  Integer normalized_volume() const;

 private:
  int n_ = 0;
  int dim_ = -1;
  int whole_face_ = -1;
  std::vector<Exponent> vertices_;
  std::vector<FaceDescriptor> faces_;
  std::vector<std::pair<Integer, ZVec>> facets_;
  std::vector<std::pair<Integer, ZVec>> hull_eqs_;
};

// Normal fan of a full-dimensional polytope containing the origin: one cone
// per nonempty face, indexed like faces().  Throws DegenerateInputError when
// the polytope is lower dimensional or misses the origin.
struct Fan {
  std::vector<std::pair<int, Cone>> entries;  // (face index, normal cone)
  const Cone& cone_of(int face_index) const;
};

Fan dual_fan(const LatticePolytope& p);

// Terms of p whose exponents lie on the given face of P.  P must contain
// supp(p) and the face must belong to P.
SparsePoly gamma_part(const SparsePoly& p, const LatticePolytope& P, const FaceDescriptor& face);

// Compact display form of a face by its vertex coordinates: "{(0,0),(2,2)}".
std::string face_label(const LatticePolytope& P, const FaceDescriptor& face);

}  // namespace nbif
