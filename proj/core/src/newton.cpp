#include <newtonbif/errors.hpp>
#include <newtonbif/newton.hpp>

#include <algorithm>
#include <stdexcept>

namespace nbif {

LatticePolytope newton_polyhedron_at_infinity(const SparsePoly& f) {
  if (f.is_zero()) throw std::invalid_argument("the zero polynomial has no Newton polyhedron");
  std::vector<Exponent> pts = f.support();
  pts.push_back(Exponent(f.ambient_dim(), 0));
  return LatticePolytope::convex_hull(pts, f.ambient_dim());
}

bool is_convenient(const SparsePoly& f) {
  const int n = f.ambient_dim();
  std::vector<bool> axis_met(n, false);
  for (const auto& [e, c] : f.terms()) {
    int nz = -1;
    bool pure = true;
    for (int i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      if (nz != -1) { pure = false; break; }
      nz = i;
    }
    if (pure && nz != -1 && e[nz] > 0) axis_met[nz] = true;
  }
  return std::all_of(axis_met.begin(), axis_met.end(), [](bool b) { return b; });
}

bool check_dim_full(const SparsePoly& f) {
  return newton_polyhedron_at_infinity(f).dim() == f.ambient_dim();
}

bool is_relatively_simple(const Cone& sigma) {
  if (sigma.dim <= 3) return true;
  return is_simplicial(sigma);
}

NewtonData analyze_newton(const SparsePoly& f) {
  NewtonData data{f, newton_polyhedron_at_infinity(f)};
  data.convenient = is_convenient(f);
  data.full_dimensional = data.newton.dim() == f.ambient_dim();

  SparsePoly positive_part = f;
  positive_part.set_coefficient(Exponent(f.ambient_dim(), 0), Rational(0));
  if (!positive_part.is_zero())
    data.newton_positive =
        LatticePolytope::convex_hull(positive_part.support(), f.ambient_dim());

  if (!data.full_dimensional) return data;
  data.fan = dual_fan(data.newton);

  const int n = f.ambient_dim();
  const Cone orthant = positive_orthant(n);
  for (const auto& [fi, sigma] : data.fan->entries) {
    const FaceDescriptor& face = data.newton.faces()[fi];
    if (!face.contains_origin || face.dim < 1) continue;
    if (cone_subset_orthant(sigma)) continue;

    FaceClassification c;
    c.face_index = fi;
    c.sigma = sigma;
    c.atypical = true;
    c.sigma_cap_orthant = cone_intersect(sigma, orthant);
    c.relatively_simple = is_relatively_simple(sigma);

    // barycenter of the face strictly positive in every coordinate
    c.relint_in_open_orthant = true;
    for (int j = 0; j < n && c.relint_in_open_orthant; ++j) {
      Integer s = 0;
      for (int vi : face.vertex_indices) s += data.newton.vertices()[vi][j];
      if (s <= 0) c.relint_in_open_orthant = false;
    }

    for (const auto& r : c.sigma.rays)
      if (std::binary_search(c.sigma_cap_orthant.rays.begin(),
                             c.sigma_cap_orthant.rays.end(), r))
        ++c.common_edges;
    c.orthant_face = face_of_orthant(c.sigma_cap_orthant);

    if (data.newton_positive) {
      const FaceDescriptor& delta =
          data.newton_positive->supporting_face(face.support_normal);
      if (delta.dim == face.dim) c.bad_partner = delta;
    }
    data.atypical.push_back(std::move(c));
  }
  return data;
}

std::vector<FaceClassification> atypical_faces(const SparsePoly& f) {
  NewtonData data = analyze_newton(f);
  if (!data.full_dimensional)
    throw DegenerateInputError(
        "dual subdivision is not a fan; the Newton polyhedron must be full-dimensional");
  return data.atypical;
}

std::vector<std::pair<FaceDescriptor, FaceDescriptor>> bad_faces(const NewtonData& data) {
  if (!data.newton_positive)
    throw std::domain_error("bad faces are undefined: f - f(0) = 0");
  std::vector<std::pair<FaceDescriptor, FaceDescriptor>> out;
  for (const auto& c : data.atypical)
    if (c.bad_partner) out.emplace_back(*c.bad_partner, data.face_of(c));
  return out;
}

}  // namespace nbif
