#include <newtonbif/errors.hpp>
#include <newtonbif/polytope.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace nbif {
namespace {

ZVec homogenize(const Exponent& p) {
  ZVec h(p.size() + 1);
  h[0] = 1;
  for (std::size_t i = 0; i < p.size(); ++i) h[i + 1] = p[i];
  return h;
}

int affine_rank(const std::vector<Exponent>& pts, const std::vector<int>& idx) {
  if (idx.size() <= 1) return static_cast<int>(idx.size()) - 1;
  ZMat diffs;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    const Exponent& a = pts[idx[0]];
    const Exponent& b = pts[idx[i]];
    ZVec d(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) d[j] = Integer(b[j]) - Integer(a[j]);
    diffs.push_back(std::move(d));
  }
  return rank(diffs);
}

}  // namespace

LatticePolytope LatticePolytope::convex_hull(const std::vector<Exponent>& points,
                                             int ambient_dim) {
  if (ambient_dim < 1 || ambient_dim > 8)
    throw GuardLimitError("polytope ambient dimension must be between 1 and 8");
  if (points.empty()) throw std::invalid_argument("convex hull of an empty point set");

  std::set<Exponent> dedup;
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != ambient_dim)
      throw std::invalid_argument("point length does not match ambient dimension");
    dedup.insert(p);
  }
  std::vector<Exponent> pts(dedup.begin(), dedup.end());

  // homogenize: P = conv(pts) corresponds to the cone over {(1, p)}
  std::vector<ZVec> hom;
  hom.reserve(pts.size());
  for (const auto& p : pts) hom.push_back(homogenize(p));
  Cone c = cone_from_rays(ambient_dim + 1, hom);

  LatticePolytope poly;
  poly.n_ = ambient_dim;
  for (const auto& h : c.halfspaces) {
    ZVec a(h.begin() + 1, h.end());
    poly.facets_.emplace_back(h[0], std::move(a));
  }
  for (const auto& e : c.equations) {
    ZVec a(e.begin() + 1, e.end());
    poly.hull_eqs_.emplace_back(e[0], std::move(a));
  }

  // vertices: points whose active constraint set has corank one in the cone
  const int nh = ambient_dim + 1;
  for (const auto& p : pts) {
    ZVec hp = homogenize(p);
    ZMat active(c.equations.begin(), c.equations.end());
    for (const auto& h : c.halfspaces)
      if (dot(h, hp) == 0) active.push_back(h);
    if (rank(active) == nh - 1) poly.vertices_.push_back(p);
  }
  std::sort(poly.vertices_.begin(), poly.vertices_.end());

  // face lattice: meet closure of the facet vertex sets
  const int nv = static_cast<int>(poly.vertices_.size());
  std::vector<std::vector<int>> facet_sets;
  for (const auto& [b, a] : poly.facets_) {
    std::vector<int> s;
    for (int v = 0; v < nv; ++v) {
      Integer val = b + dot(a, zvec_of(poly.vertices_[v]));
      if (val == 0) s.push_back(v);
    }
    facet_sets.push_back(std::move(s));
  }
  std::set<std::vector<int>> sets;
  std::vector<int> all(nv);
  for (int v = 0; v < nv; ++v) all[v] = v;
  sets.insert(all);
  sets.insert(std::vector<int>{});
  for (const auto& s : facet_sets) sets.insert(s);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(sets.begin(), sets.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<int> inter;
        std::set_intersection(snapshot[i].begin(), snapshot[i].end(), snapshot[j].begin(),
                              snapshot[j].end(), std::back_inserter(inter));
        if (sets.insert(inter).second) grew = true;
      }
  }

  Exponent origin(ambient_dim, 0);
  for (const auto& s : sets) {
    FaceDescriptor f;
    f.vertex_indices = s;
    f.dim = affine_rank(poly.vertices_, s);
    f.support_normal = ZVec(ambient_dim, 0);
    f.support_offset = 0;
    if (!s.empty()) {
      // sum the normals of every facet containing the face; the minimum of
      // the summed functional over P is attained exactly on the face
      for (std::size_t fi = 0; fi < facet_sets.size(); ++fi) {
        if (!std::includes(facet_sets[fi].begin(), facet_sets[fi].end(), s.begin(), s.end()))
          continue;
        const auto& [b, a] = poly.facets_[fi];
        for (int j = 0; j < ambient_dim; ++j) f.support_normal[j] += a[j];
        f.support_offset -= b;
      }
    }
    poly.faces_.push_back(std::move(f));
  }
  std::sort(poly.faces_.begin(), poly.faces_.end(),
            [](const FaceDescriptor& a, const FaceDescriptor& b) {
              if (a.dim != b.dim) return a.dim < b.dim;
              return a.vertex_indices < b.vertex_indices;
            });
  poly.dim_ = poly.faces_.back().dim;
  poly.whole_face_ = static_cast<int>(poly.faces_.size()) - 1;
  for (auto& f : poly.faces_) f.contains_origin = poly.face_contains_point(f, origin);
  return poly;
}

bool LatticePolytope::contains_point(const Exponent& pt) const {
  if (static_cast<int>(pt.size()) != n_)
    throw std::invalid_argument("point length does not match ambient dimension");
  ZVec z = zvec_of(pt);
  for (const auto& [b, a] : hull_eqs_)
    if (b + dot(a, z) != 0) return false;
  for (const auto& [b, a] : facets_)
    if (b + dot(a, z) < 0) return false;
  return true;
}

bool LatticePolytope::face_contains_point(const FaceDescriptor& f, const Exponent& pt) const {
  if (f.dim < 0) return false;
  if (!contains_point(pt)) return false;
  return dot(f.support_normal, zvec_of(pt)) == f.support_offset;
}

int LatticePolytope::supporting_face_index(const ZVec& u) const {
  if (static_cast<int>(u.size()) != n_)
    throw std::invalid_argument("functional length does not match ambient dimension");
  std::vector<int> argmin;
  Integer best = 0;
  for (int v = 0; v < static_cast<int>(vertices_.size()); ++v) {
    Integer val = dot(u, zvec_of(vertices_[v]));
    if (argmin.empty() || val < best) {
      best = val;
      argmin.assign(1, v);
    } else if (val == best) {
      argmin.push_back(v);
    }
  }
  auto idx = face_index_of(argmin);
  if (!idx) throw std::logic_error("argmin vertex set is not a face");
  return *idx;
}

const FaceDescriptor& LatticePolytope::supporting_face(const ZVec& u) const {
  return faces_[supporting_face_index(u)];
}

std::optional<int> LatticePolytope::face_index_of(
    const std::vector<int>& sorted_vertex_indices) const {
  for (int i = 0; i < static_cast<int>(faces_.size()); ++i)
    if (faces_[i].vertex_indices == sorted_vertex_indices) return i;
  return std::nullopt;
}

std::vector<Exponent> LatticePolytope::face_span_basis(const FaceDescriptor& f) const {
  if (f.dim < 1)
    throw std::invalid_argument("face_span_basis: face dimension must be at least 1");
  ZMat diffs;
  const Exponent& base = vertices_[f.vertex_indices[0]];
  for (std::size_t i = 1; i < f.vertex_indices.size(); ++i) {
    const Exponent& v = vertices_[f.vertex_indices[i]];
    ZVec d(n_);
    for (int j = 0; j < n_; ++j) d[j] = Integer(v[j]) - Integer(base[j]);
    diffs.push_back(std::move(d));
  }
  ZMat sat = saturate_row_span(diffs, n_);
  std::vector<Exponent> basis;
  basis.reserve(sat.size());
  for (const auto& row : sat) basis.push_back(int64_of(row));
  return basis;
}

Integer LatticePolytope::normalized_volume() const {
  if (dim_ <= 0) return 1;

  // intrinsic integer coordinates of every vertex
  std::vector<Exponent> span = face_span_basis(whole_face());
  ZMat basis;
  for (const auto& b : span) basis.push_back(zvec_of(b));
  const Exponent& base = vertices_[whole_face().vertex_indices[0]];
  std::vector<ZVec> coords(vertices_.size());
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    ZVec d(n_);
    for (int j = 0; j < n_; ++j) d[j] = Integer(vertices_[v][j]) - Integer(base[j]);
    auto c = integer_coordinates(basis, d);
    if (!c) throw std::logic_error("vertex outside the saturated span lattice");
    coords[v] = *c;
  }

  // pulling triangulation through the face lattice
  std::vector<std::vector<int>> children(faces_.size());
  for (std::size_t i = 0; i < faces_.size(); ++i)
    for (std::size_t j = 0; j < faces_.size(); ++j) {
      if (faces_[j].dim != faces_[i].dim - 1) continue;
      if (std::includes(faces_[i].vertex_indices.begin(), faces_[i].vertex_indices.end(),
                        faces_[j].vertex_indices.begin(), faces_[j].vertex_indices.end()))
        children[i].push_back(static_cast<int>(j));
    }
  std::map<int, std::vector<std::vector<int>>> memo;
  auto simplices = [&](auto&& self, int fi) -> const std::vector<std::vector<int>>& {
    auto it = memo.find(fi);
    if (it != memo.end()) return it->second;
    const FaceDescriptor& f = faces_[fi];
    std::vector<std::vector<int>> out;
    if (f.dim == 0) {
      out.push_back(f.vertex_indices);
    } else {
      int w = f.vertex_indices[0];
      for (int ci : children[fi]) {
        const auto& cf = faces_[ci];
        if (std::binary_search(cf.vertex_indices.begin(), cf.vertex_indices.end(), w)) continue;
        for (const auto& s : self(self, ci)) {
          std::vector<int> simplex;
          simplex.push_back(w);
          simplex.insert(simplex.end(), s.begin(), s.end());
          out.push_back(std::move(simplex));
        }
      }
    }
    return memo.emplace(fi, std::move(out)).first->second;
  };

  Integer total = 0;
  for (const auto& s : simplices(simplices, whole_face_)) {
    ZMat m;
    for (std::size_t i = 1; i < s.size(); ++i) {
      ZVec d(coords[s[0]].size());
      for (std::size_t j = 0; j < d.size(); ++j) d[j] = coords[s[i]][j] - coords[s[0]][j];
      m.push_back(std::move(d));
    }
    total += abs(det(m));
  }
  return total;
}

const Cone& Fan::cone_of(int face_index) const {
  for (const auto& [fi, c] : entries)
    if (fi == face_index) return c;
  throw std::invalid_argument("face index has no cone in the fan");
}

Fan dual_fan(const LatticePolytope& p) {
  Exponent origin(p.ambient_dim(), 0);
  if (p.dim() != p.ambient_dim() || !p.contains_point(origin))
    throw DegenerateInputError(
        "dual subdivision is not a fan; the polyhedron must be full-dimensional and contain "
        "the origin");
  Fan fan;
  const int n = p.ambient_dim();
  for (int fi = 0; fi < static_cast<int>(p.faces().size()); ++fi) {
    const FaceDescriptor& f = p.faces()[fi];
    if (f.dim < 0) continue;
    const Exponent& w0 = p.vertices()[f.vertex_indices[0]];
    std::vector<ZVec> ineqs, eqs;
    for (const auto& v : p.vertices()) {
      ZVec d(n);
      for (int j = 0; j < n; ++j) d[j] = Integer(v[j]) - Integer(w0[j]);
      ineqs.push_back(std::move(d));
    }
    for (std::size_t i = 1; i < f.vertex_indices.size(); ++i) {
      const Exponent& v = p.vertices()[f.vertex_indices[i]];
      ZVec d(n);
      for (int j = 0; j < n; ++j) d[j] = Integer(v[j]) - Integer(w0[j]);
      eqs.push_back(std::move(d));
    }
    Cone c = cone_from_halfspaces(n, ineqs, eqs);
    if (c.dim + f.dim != n)
      throw std::logic_error("normal cone dimension mismatch in dual fan");
    fan.entries.emplace_back(fi, std::move(c));
  }
  return fan;
}

SparsePoly gamma_part(const SparsePoly& p, const LatticePolytope& P,
                      const FaceDescriptor& face) {
  if (face.dim < 0) throw std::invalid_argument("gamma part of the empty face");
  auto idx = P.face_index_of(face.vertex_indices);
  if (!idx) throw std::invalid_argument("face does not belong to the supplied polytope");
  SparsePoly out(p.ambient_dim(), p.mode());
  for (const auto& [e, c] : p.terms()) {
    if (!P.contains_point(e))
      throw std::invalid_argument("support of the polynomial is not contained in the polytope");
    if (dot(face.support_normal, zvec_of(e)) == face.support_offset)
      out.set_coefficient(e, c);
  }
  return out;
}

std::string face_label(const LatticePolytope& P, const FaceDescriptor& face) {
  std::string s = "{";
  for (std::size_t i = 0; i < face.vertex_indices.size(); ++i) {
    if (i) s += ",";
    s += "(";
    const Exponent& v = P.vertices()[face.vertex_indices[i]];
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j) s += ",";
      s += std::to_string(v[j]);
    }
    s += ")";
  }
  s += "}";
  return s;
}

}  // namespace nbif
