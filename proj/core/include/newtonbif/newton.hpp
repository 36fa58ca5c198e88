// Analysis of the Newton polyhedron at infinity: convenience, the dual fan,
// atypical faces and their bad-face partners, relative simplicity.
#pragma once

#include <newtonbif/polytope.hpp>

#include <optional>
#include <vector>

namespace nbif {

// All per-face combinatorial facts the certifier consumes.
struct FaceClassification {
  int face_index = -1;  // into NewtonData::newton.faces()
  Cone sigma;           // normal cone sigma(gamma)
  Cone sigma_cap_orthant;
  bool atypical = false;
  bool relatively_simple = false;
  // exact test of relint(gamma) lying in the open positive orthant, which is
  // equivalent to sigma_cap_orthant being the zero cone
  bool relint_in_open_orthant = false;
  int common_edges = 0;  // extreme rays shared by sigma and sigma_cap_orthant
  // axis set J when sigma_cap_orthant is the coordinate cone spanned by J
  std::optional<std::vector<int>> orthant_face;
  // face of NP(f - f(0)) witnessing badness (dim match), when it exists
  std::optional<FaceDescriptor> bad_partner;
};

struct NewtonData {
  SparsePoly f;
  LatticePolytope newton;  // conv(supp f united with the origin)
  bool convenient = false;
  bool full_dimensional = false;
  std::optional<Fan> fan;                          // only when full dimensional
  std::optional<LatticePolytope> newton_positive;  // NP(f - f(0)); absent when f = f(0)
  std::vector<FaceClassification> atypical;        // the atypical faces, in face order

  const FaceDescriptor& face_of(const FaceClassification& c) const {
    return newton.faces()[c.face_index];
  }
};

LatticePolytope newton_polyhedron_at_infinity(const SparsePoly& f);

// Does conv(supp f united with 0) meet the positive part of every coordinate
// axis?  For supports in the nonnegative orthant this reduces to having a
// pure power of every variable.
bool is_convenient(const SparsePoly& f);

bool check_dim_full(const SparsePoly& f);

// simplicial normal cone, or dimension at most 3
bool is_relatively_simple(const Cone& sigma);

// Full pipeline entry: hull, fan (when full dimensional), atypical face
// classification.  Never throws on lower-dimensional input; callers that
// need the fan must check full_dimensional.
NewtonData analyze_newton(const SparsePoly& f);

// Convenience wrapper matching the spec of the classifier: throws
// DegenerateInputError when the Newton polyhedron is not full dimensional.
std::vector<FaceClassification> atypical_faces(const SparsePoly& f);

// (bad face of NP(f - f(0)), atypical face of the Newton polyhedron) pairs.
// Throws std::domain_error when f - f(0) = 0.
std::vector<std::pair<FaceDescriptor, FaceDescriptor>> bad_faces(const NewtonData& data);

}  // namespace nbif
