#include "symrep/orbit_category.hpp"

#include <algorithm>
#include <sstream>

namespace symrep {
namespace {

std::string brace_list(std::vector<Index> const& xs) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << "}";
  return os.str();
}

Index position_in(std::vector<Index> const& values, Index v) {
  auto it = std::lower_bound(values.begin(), values.end(), v);
  if (it == values.end() || *it != v)
    throw Error(ErrorCode::ObjectNotFound, "value outside the diagram's value set");
  return static_cast<Index>(it - values.begin());
}

}  // namespace

bool OrbitObject::is_trivial() const {
  return submonoid.is_trivial() && subgroup.size() == 1;
}

std::string OrbitObject::label() const {
  return "(" + brace_list(submonoid.elements) + "," + brace_list(subgroup) + ")";
}

OrbitObject make_orbit_object(Submonoid const& n, std::vector<Index> const& subgroup) {
  GeneratingObject g = generating_object(n, subgroup);
  std::vector<Index> h = subgroup;
  std::sort(h.begin(), h.end());
  FiniteMonoid const& monoid = n.parent;
  constexpr Index unset = static_cast<Index>(-1);
  std::vector<Index> lift(g.mset.size(), unset);
  for (Index m = monoid.size(); m-- > 0;) lift[g.mset.act(m, g.base_point)] = m;
  if (std::find(lift.begin(), lift.end(), unset) != lift.end())
    throw Error(ErrorCode::ObjectNotFound, "generating object is not cyclic on its base point");
  return OrbitObject{n, std::move(g.completion), std::move(h), std::move(g.mset), g.base_point,
                     std::move(lift)};
}

OrbitCategory::OrbitCategory(FiniteMonoid monoid, std::vector<OrbitObject> objects,
                             Bounds const& bounds)
    : monoid_(std::move(monoid)), objects_(std::move(objects)) {
  std::size_t n = objects_.size();
  homs_.assign(n, std::vector<std::vector<std::vector<Index>>>(n));
  positions_.assign(n, std::vector<std::map<std::vector<Index>, Index>>(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      homs_[i][j] = equivariant_mappings(objects_[i].realization, objects_[j].realization, bounds);
      for (Index k = 0; k < homs_[i][j].size(); ++k) positions_[i][j].emplace(homs_[i][j][k], k);
    }
}

Index OrbitCategory::morphism_index(Index i, Index j, std::vector<Index> const& mapping) const {
  auto const& table = positions_.at(i).at(j);
  auto it = table.find(mapping);
  if (it == table.end()) throw Error(ErrorCode::ObjectNotFound, "mapping is not a morphism");
  return it->second;
}

Index OrbitCategory::compose(Index i, Index j, Index k, Index g, Index f) const {
  auto const& fm = hom(i, j).at(f);
  auto const& gm = hom(j, k).at(g);
  std::vector<Index> composite(fm.size());
  for (Index x = 0; x < fm.size(); ++x) composite[x] = gm[fm[x]];
  return morphism_index(i, k, composite);
}

Index OrbitCategory::identity(Index i) const {
  std::vector<Index> id(objects_.at(i).realization.size());
  for (Index x = 0; x < id.size(); ++x) id[x] = x;
  return morphism_index(i, i, id);
}

std::optional<Index> OrbitCategory::find(std::vector<Index> const& submonoid,
                                         std::vector<Index> const& subgroup) const {
  for (Index i = 0; i < objects_.size(); ++i)
    if (objects_[i].submonoid.elements == submonoid && objects_[i].subgroup == subgroup) return i;
  return std::nullopt;
}

Index OrbitCategory::trivial_object() const {
  for (Index i = 0; i < objects_.size(); ++i)
    if (objects_[i].is_trivial()) return i;
  throw Error(ErrorCode::ObjectNotFound, "orbit category has no (e,e) object");
}

OrbitCategory build_orbit_category(FiniteMonoid const& monoid, Bounds const& bounds) {
  if (monoid.size() > bounds.max_orbit_all_order)
    throw Error(ErrorCode::SizeBoundExceeded,
                "orbit category over all submonoids needs |M| <= " +
                    std::to_string(bounds.max_orbit_all_order) + "; pass a family instead");
  return build_orbit_category(full_family(monoid, bounds), bounds);
}

OrbitCategory build_orbit_category(FamilyZY const& family, Bounds const& bounds) {
  std::vector<FamilyEntry const*> entries;
  for (auto const& e : family.entries) entries.push_back(&e);
  std::sort(entries.begin(), entries.end(), [](auto* a, auto* b) {
    return subset_order(a->submonoid.elements, b->submonoid.elements);
  });
  std::vector<OrbitObject> objects;
  for (auto const* e : entries)
    for (auto const& h : e->subgroups) objects.push_back(make_orbit_object(e->submonoid, h));
  return OrbitCategory(family.monoid, std::move(objects), bounds);
}

bool check_category_laws(OrbitCategory const& c) {
  std::size_t n = c.size();
  try {
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        Index id_i = c.identity(i), id_j = c.identity(j);
        for (Index f = 0; f < c.hom(i, j).size(); ++f) {
          if (c.compose(i, j, j, id_j, f) != f || c.compose(i, i, j, f, id_i) != f) return false;
        }
      }
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k)
          for (Index l = 0; l < n; ++l)
            for (Index f = 0; f < c.hom(i, j).size(); ++f)
              for (Index g = 0; g < c.hom(j, k).size(); ++g)
                for (Index h = 0; h < c.hom(k, l).size(); ++h) {
                  Index left = c.compose(i, k, l, h, c.compose(i, j, k, g, f));
                  Index right = c.compose(i, j, l, c.compose(j, k, l, h, g), f);
                  if (left != right) return false;
                }
  } catch (Error const&) {
    // A composite that is not in the hom-set means the hom-sets are not closed.
    return false;
  }
  return true;
}

HomComparison compare_hom(OrbitObject const& object, FinMSet const& x, Bounds const& bounds) {
  HomComparison out;
  out.homs = equivariant_mappings(object.realization, x, bounds);
  RinvResult r = rinv_rel(object.submonoid, x);
  for (Index p : symrep::fixed_points(r.gset, object.subgroup)) out.fixed_points.push_back(r.counit(p));
  std::vector<bool> hit(out.fixed_points.size(), false);
  out.bijective = out.homs.size() == out.fixed_points.size();
  for (auto const& phi : out.homs) {
    Index v = phi[object.base_point];
    auto it = std::lower_bound(out.fixed_points.begin(), out.fixed_points.end(), v);
    if (it == out.fixed_points.end() || *it != v) {
      out.bijective = false;
      out.bijection.push_back(static_cast<Index>(-1));
      continue;
    }
    Index pos = static_cast<Index>(it - out.fixed_points.begin());
    if (hit[pos]) out.bijective = false;
    hit[pos] = true;
    out.bijection.push_back(pos);
  }
  return out;
}

HomComparison hom_via_rinv(OrbitCategory const& category, Index from, Index to,
                           Bounds const& bounds) {
  if (from >= category.size() || to >= category.size())
    throw Error(ErrorCode::ObjectNotFound, "hom_via_rinv: object index out of range");
  return compare_hom(category.object(from), category.object(to).realization, bounds);
}

bool check_functoriality(OrbitDiagram const& d) {
  OrbitCategory const& c = *d.category;
  std::size_t n = c.size();
  if (d.values.size() != n) return false;
  for (Index i = 0; i < n; ++i) {
    auto const& id = d.action[i][i][c.identity(i)];
    for (Index v = 0; v < id.size(); ++v)
      if (id[v] != v) return false;
  }
  // Contravariance: F(g ∘ f) = F(f) ∘ F(g).
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        for (Index f = 0; f < c.hom(i, j).size(); ++f)
          for (Index g = 0; g < c.hom(j, k).size(); ++g) {
            auto const& fg = d.action[i][k][c.compose(i, j, k, g, f)];
            auto const& ff = d.action[i][j][f];
            auto const& gg = d.action[j][k][g];
            for (Index v = 0; v < d.values[k].size(); ++v)
              if (fg[v] != ff[gg[v]]) return false;
          }
  return true;
}

OrbitDiagram x_functor(std::shared_ptr<OrbitCategory const> category, FinMSet const& x,
                       Bounds const&) {
  OrbitCategory const& c = *category;
  if (!(x.monoid() == c.monoid()))
    throw Error(ErrorCode::MonoidMismatch, "x_functor: M-set over a different monoid");
  std::size_t n = c.size();
  OrbitDiagram d{category, std::vector<std::vector<Index>>(n), {}};
  for (Index i = 0; i < n; ++i) {
    OrbitObject const& o = c.object(i);
    RinvResult r = rinv_rel(o.submonoid, x);
    for (Index p : fixed_points(r.gset, o.subgroup)) d.values[i].push_back(r.counit(p));
  }
  d.action.assign(n, std::vector<std::vector<std::vector<Index>>>(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (auto const& s : c.hom(i, j)) {
        // v in F(j) is the map φ_v with φ_v(m·base_j) = m·v; F(s)(v) = φ_v(s(base_i)).
        Index y = s[c.object(i).base_point];
        Index m = c.object(j).base_lift[y];
        std::vector<Index> fn;
        for (Index v : d.values[j]) fn.push_back(position_in(d.values[i], x.act(m, v)));
        d.action[i][j].push_back(std::move(fn));
      }
  return d;
}

OrbitDiagram representable(std::shared_ptr<OrbitCategory const> category, Index object) {
  OrbitCategory const& c = *category;
  if (object >= c.size()) throw Error(ErrorCode::ObjectNotFound, "representable: no such object");
  std::size_t n = c.size();
  OrbitDiagram d{category, std::vector<std::vector<Index>>(n), {}};
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < c.hom(i, object).size(); ++k) d.values[i].push_back(k);
  d.action.assign(n, std::vector<std::vector<std::vector<Index>>>(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index s = 0; s < c.hom(i, j).size(); ++s) {
        std::vector<Index> fn;
        for (Index t = 0; t < c.hom(j, object).size(); ++t) fn.push_back(c.compose(i, j, object, t, s));
        d.action[i][j].push_back(std::move(fn));
      }
  return d;
}

OrbitDiagram constant_point(std::shared_ptr<OrbitCategory const> category) {
  OrbitCategory const& c = *category;
  std::size_t n = c.size();
  OrbitDiagram d{category, std::vector<std::vector<Index>>(n, std::vector<Index>{0}), {}};
  d.action.assign(n, std::vector<std::vector<std::vector<Index>>>(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      d.action[i][j].assign(c.hom(i, j).size(), std::vector<Index>{0});
  return d;
}

FinMSet upsilon(OrbitDiagram const& d) {
  OrbitCategory const& c = *d.category;
  Index ee = c.trivial_object();
  OrbitObject const& o = c.object(ee);
  FiniteMonoid const& monoid = c.monoid();
  std::size_t size = d.values[ee].size();
  std::vector<Index> action(monoid.size() * size);
  for (Index m = 0; m < monoid.size(); ++m) {
    Index target_point = o.realization.act(m, o.base_point);
    Index phi = static_cast<Index>(-1);
    for (Index k = 0; k < c.hom(ee, ee).size(); ++k)
      if (c.hom(ee, ee)[k][o.base_point] == target_point) {
        phi = k;
        break;
      }
    if (phi == static_cast<Index>(-1))
      throw Error(ErrorCode::ObjectNotFound, "upsilon: no endomorphism of (e,e) for element");
    for (Index v = 0; v < size; ++v) action[m * size + v] = d.action[ee][ee][phi][v];
  }
  return FinMSet::from_flat(monoid, size, std::move(action));
}

}  // namespace symrep
