#include "symrep/mset.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>

#include "symrep/detail/union_find.hpp"

namespace symrep {
namespace {

constexpr Index kUnset = static_cast<Index>(-1);

void require_same_monoid(FinMSet const& a, FinMSet const& b, char const* what) {
  if (!(a.monoid() == b.monoid()))
    throw Error(ErrorCode::MonoidMismatch, std::string(what) + ": M-sets over different monoids");
}

// Points that start a new cyclic sub-M-set when scanned in index order.
std::size_t generator_count(FinMSet const& a) {
  std::vector<bool> covered(a.size(), false);
  std::size_t count = 0;
  for (Index x = 0; x < a.size(); ++x) {
    if (covered[x]) continue;
    ++count;
    for (Index m = 0; m < a.monoid().size(); ++m) covered[a.act(m, x)] = true;
  }
  return count;
}

bool power_exceeds(std::size_t base, std::size_t exponent, std::size_t limit) {
  std::size_t value = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base == 0) return false;
    if (value > limit / base) return true;
    value *= base;
  }
  return value > limit;
}

// Backtracking search over equivariant mappings. `visit` returns false to
// stop the search early. When `injective` is set, only injective mappings are
// produced.
class MapSearch {
 public:
  MapSearch(FinMSet const& source, FinMSet const& target, bool injective,
            std::vector<std::uint64_t> const* source_sig = nullptr,
            std::vector<std::uint64_t> const* target_sig = nullptr)
      : source_(source),
        target_(target),
        injective_(injective),
        source_sig_(source_sig),
        target_sig_(target_sig),
        mapping_(source.size(), kUnset),
        used_(target.size(), false) {}

  void run(std::function<bool(std::vector<Index> const&)> const& visit) {
    visit_ = &visit;
    stopped_ = false;
    extend(0);
  }

 private:
  bool assign(Index x, Index v, std::vector<Index>& trail) {
    for (Index m = 0; m < source_.monoid().size(); ++m) {
      Index sx = source_.act(m, x);
      Index tv = target_.act(m, v);
      if (mapping_[sx] == kUnset) {
        if (injective_ && used_[tv]) return false;
        mapping_[sx] = tv;
        if (injective_) used_[tv] = true;
        trail.push_back(sx);
      } else if (mapping_[sx] != tv) {
        return false;
      }
    }
    return true;
  }

  void undo(std::vector<Index> const& trail) {
    for (Index x : trail) {
      if (injective_) used_[mapping_[x]] = false;
      mapping_[x] = kUnset;
    }
  }

  void extend(Index x) {
    while (x < source_.size() && mapping_[x] != kUnset) ++x;
    if (x == source_.size()) {
      if (!(*visit_)(mapping_)) stopped_ = true;
      return;
    }
    for (Index v = 0; v < target_.size() && !stopped_; ++v) {
      if (injective_ && used_[v]) continue;
      if (source_sig_ && (*source_sig_)[x] != (*target_sig_)[v]) continue;
      std::vector<Index> trail;
      if (assign(x, v, trail)) extend(x + 1);
      undo(trail);
    }
  }

  FinMSet const& source_;
  FinMSet const& target_;
  bool injective_;
  std::vector<std::uint64_t> const* source_sig_;
  std::vector<std::uint64_t> const* target_sig_;
  std::vector<Index> mapping_;
  std::vector<bool> used_;
  std::function<bool(std::vector<Index> const&)> const* visit_ = nullptr;
  bool stopped_ = false;
};

// Isomorphism invariant of a point: which elements fix it, and the size of
// the cyclic sub-M-set it generates.
std::vector<std::uint64_t> point_signatures(FinMSet const& a) {
  std::vector<std::uint64_t> sig(a.size());
  std::vector<bool> seen(a.size());
  for (Index x = 0; x < a.size(); ++x) {
    std::uint64_t h = 1469598103934665603ULL;
    std::fill(seen.begin(), seen.end(), false);
    std::uint64_t reach = 0;
    for (Index m = 0; m < a.monoid().size(); ++m) {
      Index y = a.act(m, x);
      h = (h ^ static_cast<std::uint64_t>(y == x)) * 1099511628211ULL;
      if (!seen[y]) {
        seen[y] = true;
        ++reach;
      }
    }
    sig[x] = (h ^ reach) * 1099511628211ULL;
  }
  return sig;
}

}  // namespace

// ---------------------------------------------------------------------------
// FinMSet

FinMSet FinMSet::from_flat(FiniteMonoid monoid, std::size_t size,
                           std::vector<Index> action,
                           std::vector<std::string> names) {
  std::size_t n = monoid.size();
  if (action.size() != n * size)
    throw Error(ErrorCode::ShapeMismatch, "action table must have one row per monoid element");
  if (!names.empty() && names.size() != size)
    throw Error(ErrorCode::ShapeMismatch, "names length differs from size");
  for (Index v : action)
    if (v >= size) throw Error(ErrorCode::IndexOutOfRange, "action entry out of range");
  Index e = monoid.identity();
  for (Index a = 0; a < size; ++a)
    if (action[e * size + a] != a)
      throw Error(ErrorCode::IdentityLawViolated,
                  "identity moves point " + std::to_string(a), {a});
  for (Index m = 0; m < n; ++m)
    for (Index k = 0; k < n; ++k)
      for (Index a = 0; a < size; ++a)
        if (action[monoid.mul(m, k) * size + a] != action[m * size + action[k * size + a]])
          throw Error(ErrorCode::CompatibilityViolated,
                      "(m*n)·a != m·(n·a) at m=" + std::to_string(m) +
                          " n=" + std::to_string(k) + " a=" + std::to_string(a),
                      {m, k, a});
  return FinMSet(std::move(monoid), size, std::move(action), std::move(names));
}

FinMSet FinMSet::from_table(FiniteMonoid monoid,
                            std::vector<std::vector<Index>> const& action,
                            std::vector<std::string> names) {
  if (action.size() != monoid.size())
    throw Error(ErrorCode::ShapeMismatch, "action table must have one row per monoid element");
  std::size_t size = action.empty() ? 0 : action.front().size();
  std::vector<Index> flat;
  for (auto const& row : action) {
    if (row.size() != size) throw Error(ErrorCode::ShapeMismatch, "ragged action table");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_flat(std::move(monoid), size, std::move(flat), std::move(names));
}

std::vector<std::vector<Index>> FinMSet::action() const {
  std::vector<std::vector<Index>> rows(monoid_.size());
  for (Index m = 0; m < rows.size(); ++m) rows[m].assign(row(m).begin(), row(m).end());
  return rows;
}

std::string FinMSet::label(Index a) const {
  return names_.empty() ? std::to_string(a) : names_[a];
}

FinMSet validate_mset(FiniteMonoid const& monoid,
                      std::vector<std::vector<Index>> const& action) {
  return FinMSet::from_table(monoid, action);
}

FinMSet regular_mset(FiniteMonoid const& monoid) {
  return FinMSet::from_flat(monoid, monoid.size(), monoid.flat_table());
}

FinMSet point_mset(FiniteMonoid const& monoid) { return trivial_mset(monoid, 1); }

FinMSet empty_mset(FiniteMonoid const& monoid) { return trivial_mset(monoid, 0); }

FinMSet trivial_mset(FiniteMonoid const& monoid, std::size_t size) {
  std::vector<Index> action;
  action.reserve(monoid.size() * size);
  for (Index m = 0; m < monoid.size(); ++m)
    for (Index a = 0; a < size; ++a) action.push_back(a);
  return FinMSet::from_flat(monoid, size, std::move(action));
}

// ---------------------------------------------------------------------------
// Equivariant maps

bool is_equivariant(FinMSet const& source, FinMSet const& target,
                    std::span<Index const> mapping) {
  if (!(source.monoid() == target.monoid()) || mapping.size() != source.size())
    return false;
  for (Index v : mapping)
    if (v >= target.size()) return false;
  for (Index m = 0; m < source.monoid().size(); ++m)
    for (Index a = 0; a < source.size(); ++a)
      if (mapping[source.act(m, a)] != target.act(m, mapping[a])) return false;
  return true;
}

EqMap make_eqmap(FinMSet source, FinMSet target, std::vector<Index> mapping) {
  require_same_monoid(source, target, "make_eqmap");
  if (mapping.size() != source.size())
    throw Error(ErrorCode::ShapeMismatch, "mapping length differs from source size");
  for (Index v : mapping)
    if (v >= target.size()) throw Error(ErrorCode::IndexOutOfRange, "mapping value out of range");
  for (Index m = 0; m < source.monoid().size(); ++m)
    for (Index a = 0; a < source.size(); ++a)
      if (mapping[source.act(m, a)] != target.act(m, mapping[a]))
        throw Error(ErrorCode::NotEquivariant,
                    "f(m·a) != m·f(a) at m=" + std::to_string(m) + " a=" + std::to_string(a),
                    {m, a});
  return EqMap{std::move(source), std::move(target), std::move(mapping)};
}

EqMap identity_map(FinMSet const& a) {
  std::vector<Index> mapping(a.size());
  for (Index x = 0; x < a.size(); ++x) mapping[x] = x;
  return EqMap{a, a, std::move(mapping)};
}

EqMap compose(EqMap const& outer, EqMap const& inner) {
  if (!(inner.target == outer.source))
    throw Error(ErrorCode::MonoidMismatch, "maps are not composable");
  std::vector<Index> mapping(inner.mapping.size());
  for (Index a = 0; a < mapping.size(); ++a) mapping[a] = outer.mapping[inner.mapping[a]];
  return EqMap{inner.source, outer.target, std::move(mapping)};
}

bool is_injective(std::span<Index const> mapping) {
  std::vector<Index> sorted(mapping.begin(), mapping.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool is_bijective(std::span<Index const> mapping, std::size_t target_size) {
  return mapping.size() == target_size && is_injective(mapping);
}

std::vector<std::vector<Index>> equivariant_mappings(FinMSet const& source,
                                                     FinMSet const& target,
                                                     Bounds const& bounds) {
  require_same_monoid(source, target, "equivariant_maps");
  if (power_exceeds(target.size(), generator_count(source), bounds.max_enum))
    throw Error(ErrorCode::SizeBoundExceeded,
                "equivariant_maps: search space exceeds bound " + std::to_string(bounds.max_enum));
  std::vector<std::vector<Index>> out;
  MapSearch search(source, target, false);
  search.run([&](std::vector<Index> const& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::vector<EqMap> equivariant_maps(FinMSet const& source, FinMSet const& target,
                                    Bounds const& bounds) {
  std::vector<EqMap> out;
  for (auto& m : equivariant_mappings(source, target, bounds))
    out.push_back(EqMap{source, target, std::move(m)});
  return out;
}

std::optional<std::vector<Index>> find_isomorphism(FinMSet const& a, FinMSet const& b,
                                                   Bounds const&) {
  if (!(a.monoid() == b.monoid()) || a.size() != b.size()) return std::nullopt;
  auto sig_a = point_signatures(a);
  auto sig_b = point_signatures(b);
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::optional<std::vector<Index>> found;
  MapSearch search(a, b, true, &sig_a, &sig_b);
  search.run([&](std::vector<Index> const& m) {
    found = m;
    return false;
  });
  return found;
}

bool isomorphic(FinMSet const& a, FinMSet const& b, Bounds const& bounds) {
  return find_isomorphism(a, b, bounds).has_value();
}

std::vector<Index> fixed_points(FinMSet const& a, std::vector<Index> const& elements) {
  for (Index s : elements)
    if (s >= a.monoid().size())
      throw Error(ErrorCode::IndexOutOfRange, "fixed_points: element out of range");
  std::vector<Index> out;
  for (Index x = 0; x < a.size(); ++x) {
    bool fixed = std::all_of(elements.begin(), elements.end(),
                             [&](Index s) { return a.act(s, x) == x; });
    if (fixed) out.push_back(x);
  }
  return out;
}

std::vector<std::vector<Index>> orbits(FinMSet const& a) {
  detail::UnionFind uf(a.size());
  for (Index m = 0; m < a.monoid().size(); ++m)
    for (Index x = 0; x < a.size(); ++x) uf.unite(x, a.act(m, x));
  auto [label, count] = detail::number_classes(uf.representatives());
  std::vector<std::vector<Index>> out(count);
  for (Index x = 0; x < a.size(); ++x) out[label[x]].push_back(x);
  return out;
}

bool is_symmetric(FinMSet const& a) {
  std::vector<bool> seen(a.size());
  for (Index m = 0; m < a.monoid().size(); ++m) {
    std::fill(seen.begin(), seen.end(), false);
    for (Index y : a.row(m)) {
      if (seen[y]) return false;
      seen[y] = true;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Change of monoid

FinMSet restrict(FinMSet const& a, Submonoid const& n) {
  if (!(n.parent == a.monoid()))
    throw Error(ErrorCode::SubmonoidMismatch, "restrict: submonoid of a different monoid");
  std::vector<Index> action;
  action.reserve(n.elements.size() * a.size());
  for (Index m : n.elements) action.insert(action.end(), a.row(m).begin(), a.row(m).end());
  return FinMSet::from_flat(n.embedded, a.size(), std::move(action), a.names());
}

Induced induce(Submonoid const& n, FinMSet const& a) {
  if (!(a.monoid() == n.embedded))
    throw Error(ErrorCode::SubmonoidMismatch, "induce: M-set is not over the submonoid");
  FiniteMonoid const& parent = n.parent;
  std::size_t const na = a.size();
  auto code = [na](Index m, Index x) { return m * na + x; };
  detail::UnionFind uf(parent.size() * na);
  for (Index m = 0; m < parent.size(); ++m)
    for (Index j = 0; j < n.elements.size(); ++j)
      for (Index x = 0; x < na; ++x)
        uf.unite(code(parent.mul(m, n.elements[j]), x), code(m, a.act(j, x)));
  auto [label, count] = detail::number_classes(uf.representatives());
  // Representatives are least codes, so decode them to act.
  std::vector<Index> rep_code(count);
  for (Index c = label.size(); c-- > 0;) rep_code[label[c]] = c;
  std::vector<Index> action(parent.size() * count);
  for (Index m = 0; m < parent.size(); ++m)
    for (Index p = 0; p < count; ++p) {
      Index c = rep_code[p];
      action[m * count + p] = label[code(parent.mul(m, c / na), c % na)];
    }
  FinMSet induced = FinMSet::from_flat(parent, count, std::move(action));
  std::vector<Index> unit(na);
  for (Index x = 0; x < na; ++x) unit[x] = label[code(parent.identity(), x)];
  EqMap unit_map = make_eqmap(a, restrict(induced, n), std::move(unit));
  return Induced{std::move(induced), std::move(unit_map)};
}

Coinduced coinduce(Submonoid const& n, FinMSet const& a, Bounds const& bounds) {
  if (!(a.monoid() == n.embedded))
    throw Error(ErrorCode::SubmonoidMismatch, "coinduce: M-set is not over the submonoid");
  FiniteMonoid const& parent = n.parent;
  // M as a left N-set by multiplication.
  std::vector<Index> left_action;
  for (Index e : n.elements)
    for (Index x = 0; x < parent.size(); ++x) left_action.push_back(parent.mul(e, x));
  FinMSet m_over_n = FinMSet::from_flat(n.embedded, parent.size(), std::move(left_action));
  auto functions = equivariant_mappings(m_over_n, a, bounds);
  std::map<std::vector<Index>, Index> position;
  for (Index i = 0; i < functions.size(); ++i) position.emplace(functions[i], i);
  std::size_t count = functions.size();
  std::vector<Index> action(parent.size() * count);
  std::vector<Index> shifted(parent.size());
  for (Index m = 0; m < parent.size(); ++m)
    for (Index i = 0; i < count; ++i) {
      for (Index x = 0; x < parent.size(); ++x) shifted[x] = functions[i][parent.mul(x, m)];
      action[m * count + i] = position.at(shifted);
    }
  return Coinduced{FinMSet::from_flat(parent, count, std::move(action)), std::move(functions)};
}

// ---------------------------------------------------------------------------
// Limits and colimits

Coproduct coproduct(FinMSet const& a, FinMSet const& b) {
  require_same_monoid(a, b, "coproduct");
  std::size_t n = a.size() + b.size();
  std::vector<Index> action;
  action.reserve(a.monoid().size() * n);
  for (Index m = 0; m < a.monoid().size(); ++m) {
    for (Index x : a.row(m)) action.push_back(x);
    for (Index y : b.row(m)) action.push_back(a.size() + y);
  }
  FinMSet sum = FinMSet::from_flat(a.monoid(), n, std::move(action));
  std::vector<Index> left(a.size()), right(b.size());
  for (Index x = 0; x < a.size(); ++x) left[x] = x;
  for (Index y = 0; y < b.size(); ++y) right[y] = a.size() + y;
  EqMap l{a, sum, std::move(left)};
  EqMap r{b, sum, std::move(right)};
  return Coproduct{std::move(sum), std::move(l), std::move(r)};
}

FinMSet product(FinMSet const& a, FinMSet const& b) {
  require_same_monoid(a, b, "product");
  std::size_t n = a.size() * b.size();
  std::vector<Index> action;
  action.reserve(a.monoid().size() * n);
  for (Index m = 0; m < a.monoid().size(); ++m)
    for (Index x = 0; x < a.size(); ++x)
      for (Index y = 0; y < b.size(); ++y) action.push_back(a.act(m, x) * b.size() + b.act(m, y));
  return FinMSet::from_flat(a.monoid(), n, std::move(action));
}

Pushout pushout(EqMap const& f, EqMap const& g) {
  require_same_monoid(f.source, g.source, "pushout");
  if (!(f.source == g.source))
    throw Error(ErrorCode::ShapeMismatch, "pushout: legs have different sources");
  require_same_monoid(f.target, g.target, "pushout");
  Coproduct sum = coproduct(f.target, g.target);
  std::vector<std::pair<Index, Index>> glue;
  for (Index c = 0; c < f.source.size(); ++c)
    glue.emplace_back(f(c), f.target.size() + g(c));
  QuotientMSet q = quotient_mset(sum.mset, mset_congruence_closure(sum.mset, glue));
  EqMap from_a = compose(q.projection, sum.left);
  EqMap from_b = compose(q.projection, sum.right);
  return Pushout{std::move(q.mset), std::move(from_a), std::move(from_b)};
}

MSetCongruence mset_congruence_closure(FinMSet const& a,
                                       std::vector<std::pair<Index, Index>> const& pairs) {
  detail::UnionFind uf(a.size());
  std::vector<std::pair<Index, Index>> work;
  for (auto [x, y] : pairs) {
    if (x >= a.size() || y >= a.size())
      throw Error(ErrorCode::IndexOutOfRange, "congruence pair out of range");
    work.emplace_back(x, y);
  }
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (!uf.unite(x, y)) continue;
    for (Index m = 0; m < a.monoid().size(); ++m) work.emplace_back(a.act(m, x), a.act(m, y));
  }
  return MSetCongruence{a, uf.representatives()};
}

MSetCongruence make_mset_congruence(FinMSet const& a, std::vector<Index> const& class_labels) {
  if (class_labels.size() != a.size())
    throw Error(ErrorCode::ShapeMismatch, "one class label per point required");
  std::map<Index, Index> least;
  for (Index x = 0; x < a.size(); ++x) least.emplace(class_labels[x], x);
  std::vector<Index> rep(a.size());
  for (Index x = 0; x < a.size(); ++x) rep[x] = least.at(class_labels[x]);
  for (Index m = 0; m < a.monoid().size(); ++m)
    for (Index x = 0; x < a.size(); ++x)
      if (rep[a.act(m, rep[x])] != rep[a.act(m, x)])
        throw Error(ErrorCode::NotEquivariant,
                    "relation is not M-equivariant at m=" + std::to_string(m) +
                        " a=" + std::to_string(x),
                    {m, x});
  return MSetCongruence{a, std::move(rep)};
}

QuotientMSet quotient_mset(FinMSet const& a, MSetCongruence const& rho) {
  if (!(rho.mset == a))
    throw Error(ErrorCode::MonoidMismatch, "quotient_mset: relation is over another M-set");
  auto [label, count] = detail::number_classes(rho.representative);
  std::vector<Index> rep_of(count);
  for (Index x = a.size(); x-- > 0;) rep_of[label[x]] = x;
  std::vector<Index> action(a.monoid().size() * count);
  for (Index m = 0; m < a.monoid().size(); ++m)
    for (Index c = 0; c < count; ++c) action[m * count + c] = label[a.act(m, rep_of[c])];
  FinMSet quotient = FinMSet::from_flat(a.monoid(), count, std::move(action));
  EqMap projection = make_eqmap(a, quotient, label);
  return QuotientMSet{std::move(quotient), std::move(projection)};
}

}  // namespace symrep
