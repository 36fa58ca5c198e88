#include <newtonbif/cone.hpp>
#include <newtonbif/errors.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nbif {
namespace {

// Incremental double description for a cone given by inequalities inside the
// full working space.  State is always the exact cone of the constraints
// inserted so far: a lineality basis plus extreme rays of the pointed part.
struct DDState {
  int n;
  std::vector<ZVec> rays;
  std::vector<ZVec> lin;
  std::vector<ZVec> inserted;

  explicit DDState(int dim) : n(dim) {
    lin.resize(dim, ZVec(dim, 0));
    for (int i = 0; i < dim; ++i) lin[i][i] = 1;
  }

  bool ray_is_extreme(const ZVec& r) const {
    ZMat active;
    for (const auto& c : inserted)
      if (dot(c, r) == 0) active.push_back(c);
    int needed = n - static_cast<int>(lin.size()) - 1;
    if (needed <= 0) return true;
    return rank(active) >= needed;
  }

  void prune_and_sort() {
    std::vector<ZVec> kept;
    std::set<ZVec> seen;
    for (const auto& r : rays) {
      if (!seen.insert(r).second) continue;
      if (ray_is_extreme(r)) kept.push_back(r);
    }
    std::sort(kept.begin(), kept.end());
    rays = std::move(kept);
  }

  void insert(const ZVec& a) {
    // lineality split: some line leaves the halfspace
    std::size_t split = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) { split = i; break; }
    if (split < lin.size()) {
      ZVec l0 = lin[split];
      if (dot(a, l0) < 0)
        for (auto& x : l0) x = -x;
      Integer al0 = dot(a, l0);
      std::vector<ZVec> new_lin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == split) continue;
        ZVec l = lin[i];
        Integer al = dot(a, l);
        for (int j = 0; j < n; ++j) l[j] = al0 * l[j] - al * l0[j];
        make_primitive(l);
        new_lin.push_back(std::move(l));
      }
      for (auto& r : rays) {
        Integer ar = dot(a, r);
        if (ar == 0) continue;
        for (int j = 0; j < n; ++j) r[j] = al0 * r[j] - ar * l0[j];
        make_primitive(r);
      }
      lin = std::move(new_lin);
      rays.push_back(std::move(l0));
      inserted.push_back(a);
      prune_and_sort();
      return;
    }

    std::vector<ZVec> plus, zero, minus;
    for (auto& r : rays) {
      Integer s = dot(a, r);
      if (s > 0)
        plus.push_back(std::move(r));
      else if (s == 0)
        zero.push_back(std::move(r));
      else
        minus.push_back(std::move(r));
    }
    inserted.push_back(a);
    if (minus.empty()) {
      rays = std::move(plus);
      for (auto& r : zero) rays.push_back(std::move(r));
      prune_and_sort();
      return;
    }
    std::vector<ZVec> next = plus;
    for (auto& r : zero) next.push_back(r);
    for (const auto& rp : plus) {
      Integer sp = dot(a, rp);
      for (const auto& rm : minus) {
        Integer sm = -dot(a, rm);
        ZVec comb(n);
        for (int j = 0; j < n; ++j) comb[j] = sm * rp[j] + sp * rm[j];
        make_primitive(comb);
        next.push_back(std::move(comb));
        if (next.size() > 4 * kMaxRays)
          throw GuardLimitError("double description ray guard exceeded (limit 64)");
      }
    }
    rays = std::move(next);
    prune_and_sort();
    if (rays.size() > kMaxRays)
      throw GuardLimitError("double description ray guard exceeded (limit 64)");
  }
};

// V-representation of {x : ineqs.x >= 0, eqs.x = 0}, exact.
void dd_vrep(int n, const std::vector<ZVec>& ineqs, const std::vector<ZVec>& eqs,
             std::vector<ZVec>& rays_out, std::vector<ZVec>& lin_out) {
  // work inside the equality kernel
  ZMat kernel = integer_kernel_basis(eqs, n);
  const int k = static_cast<int>(kernel.size());
  if (k == 0) {
    rays_out.clear();
    lin_out.clear();
    return;
  }
  DDState st(k);
  for (const auto& a : ineqs) {
    ZVec proj(k);
    bool nonzero = false;
    for (int j = 0; j < k; ++j) {
      proj[j] = dot(a, kernel[j]);
      if (proj[j] != 0) nonzero = true;
    }
    if (nonzero) st.insert(proj);
  }
  auto lift = [&](const ZVec& v) {
    ZVec out(n, 0);
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < n; ++i) out[i] += v[j] * kernel[j][i];
    make_primitive(out);
    return out;
  };
  rays_out.clear();
  lin_out.clear();
  for (const auto& r : st.rays) rays_out.push_back(lift(r));
  for (const auto& l : st.lin) lin_out.push_back(lift(l));
  std::sort(rays_out.begin(), rays_out.end());
  std::sort(lin_out.begin(), lin_out.end());
}

void canonicalize_sign(std::vector<ZVec>& vs) {
  for (auto& v : vs)
    for (const auto& x : v) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : v) y = -y;
      break;
    }
  std::sort(vs.begin(), vs.end());
}

Cone assemble(int n, std::vector<ZVec> rays, std::vector<ZVec> lin,
              std::vector<ZVec> ineqs, std::vector<ZVec> eqs) {
  Cone c;
  c.ambient_dim = n;
  c.rays = std::move(rays);
  c.lineality = std::move(lin);
  c.halfspaces = std::move(ineqs);
  c.equations = std::move(eqs);
  canonicalize_sign(c.lineality);
  canonicalize_sign(c.equations);
  std::sort(c.rays.begin(), c.rays.end());
  std::sort(c.halfspaces.begin(), c.halfspaces.end());
  ZMat span = c.lineality;
  for (const auto& r : c.rays) span.push_back(r);
  c.dim = rank(span);
  return c;
}

}  // namespace

bool Cone::contains(const ZVec& u) const {
  for (const auto& e : equations)
    if (dot(e, u) != 0) return false;
  for (const auto& h : halfspaces)
    if (dot(h, u) < 0) return false;
  return true;
}

bool Cone::contains_in_relint(const ZVec& u) const {
  for (const auto& e : equations)
    if (dot(e, u) != 0) return false;
  for (const auto& h : halfspaces)
    if (dot(h, u) <= 0) return false;
  return true;
}

Cone cone_from_rays(int n, const std::vector<ZVec>& rays_in,
                    const std::vector<ZVec>& lineality_in) {
  if (n < 1 || n > 8) throw GuardLimitError("cone ambient dimension must be between 1 and 8");
  for (const auto& v : rays_in)
    if (static_cast<int>(v.size()) != n)
      throw std::invalid_argument("ray length does not match ambient dimension");
  for (const auto& v : lineality_in)
    if (static_cast<int>(v.size()) != n)
      throw std::invalid_argument("lineality vector length does not match ambient dimension");

  // dual cone: u with u.r >= 0 on generators, u.l = 0 on lines
  std::vector<ZVec> dual_rays, dual_lin;
  std::vector<ZVec> gens;
  for (auto v : rays_in) {
    make_primitive(v);
    bool zero = std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
    if (!zero) gens.push_back(std::move(v));
  }
  dd_vrep(n, gens, lineality_in, dual_rays, dual_lin);
  // back through the dual: canonical V-representation of the original cone
  std::vector<ZVec> rays, lin;
  dd_vrep(n, dual_rays, dual_lin, rays, lin);
  return assemble(n, std::move(rays), std::move(lin), std::move(dual_rays),
                  std::move(dual_lin));
}

Cone cone_from_halfspaces(int n, const std::vector<ZVec>& ineqs, const std::vector<ZVec>& eqs) {
  if (n < 1 || n > 8) throw GuardLimitError("cone ambient dimension must be between 1 and 8");
  std::vector<ZVec> rays, lin;
  dd_vrep(n, ineqs, eqs, rays, lin);
  // dualize once more for an irredundant halfspace description
  std::vector<ZVec> dual_rays, dual_lin;
  dd_vrep(n, rays, lin, dual_rays, dual_lin);
  return assemble(n, std::move(rays), std::move(lin), std::move(dual_rays),
                  std::move(dual_lin));
}

Cone cone_intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim != b.ambient_dim)
    throw std::invalid_argument("cone_intersect: ambient dimension mismatch");
  std::vector<ZVec> ineqs = a.halfspaces;
  ineqs.insert(ineqs.end(), b.halfspaces.begin(), b.halfspaces.end());
  std::vector<ZVec> eqs = a.equations;
  eqs.insert(eqs.end(), b.equations.begin(), b.equations.end());
  return cone_from_halfspaces(a.ambient_dim, ineqs, eqs);
}

Cone positive_orthant(int n) {
  std::vector<ZVec> ineqs;
  for (int i = 0; i < n; ++i) {
    ZVec e(n, 0);
    e[i] = 1;
    ineqs.push_back(std::move(e));
  }
  return cone_from_halfspaces(n, ineqs);
}

bool cone_subset_orthant(const Cone& c) {
  if (!c.lineality.empty()) return false;
  for (const auto& r : c.rays)
    for (const auto& x : r)
      if (x < 0) return false;
  return true;
}

bool is_simplicial(const Cone& c) {
  if (!c.lineality.empty())
    throw std::invalid_argument("is_simplicial: cone has nontrivial lineality");
  return static_cast<int>(c.rays.size()) == c.dim;
}

std::optional<std::vector<int>> face_of_orthant(const Cone& c) {
  if (!cone_subset_orthant(c))
    throw std::domain_error("cone is not contained in the nonnegative orthant");
  std::vector<int> axes;
  for (const auto& r : c.rays) {
    int axis = -1;
    for (int i = 0; i < c.ambient_dim; ++i) {
      if (r[i] == 0) continue;
      if (axis != -1 || r[i] != 1) return std::nullopt;  // not a coordinate ray
      axis = i;
    }
    axes.push_back(axis + 1);
  }
  std::sort(axes.begin(), axes.end());
  return axes;
}

}  // namespace nbif
