// Rational polyhedral cones with exact double-description conversion between
// generator and halfspace representations.
#pragma once

#include <newtonbif/intlinalg.hpp>

#include <optional>
#include <vector>

namespace nbif {

// Desk-scale guard: a single cone may not accumulate more extreme rays.
inline constexpr std::size_t kMaxRays = 64;

struct Cone {
  int ambient_dim = 0;
  std::vector<ZVec> rays;        // primitive extreme rays of the pointed part, sorted
  std::vector<ZVec> lineality;   // lattice basis of the lineality space
  std::vector<ZVec> halfspaces;  // irredundant inequality normals a, meaning a.x >= 0
  std::vector<ZVec> equations;   // equality normals, meaning a.x = 0
  int dim = 0;

  bool pointed() const { return lineality.empty(); }
  bool is_zero() const { return dim == 0; }
  bool contains(const ZVec& u) const;
  // strict inequality on every (irredundant) halfspace
  bool contains_in_relint(const ZVec& u) const;
};

// Both constructors compute and canonicalize the other representation.
Cone cone_from_rays(int n, const std::vector<ZVec>& rays,
                    const std::vector<ZVec>& lineality = {});
Cone cone_from_halfspaces(int n, const std::vector<ZVec>& ineqs,
                          const std::vector<ZVec>& eqs = {});

Cone cone_intersect(const Cone& a, const Cone& b);

Cone positive_orthant(int n);

bool cone_subset_orthant(const Cone& c);

// Throws std::invalid_argument when the cone has lineality.
bool is_simplicial(const Cone& c);

// If c equals the coordinate-plane cone spanned by axes J, returns J
// (1-based axis indices, empty for the zero cone).  Precondition: c is
// contained in the nonnegative orthant; throws std::domain_error otherwise.
std::optional<std::vector<int>> face_of_orthant(const Cone& c);

}  // namespace nbif
