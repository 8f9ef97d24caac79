#include "symrep/monoid.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "symrep/detail/union_find.hpp"

namespace symrep {
namespace {

std::string triple(Index a, Index b, Index c) {
  std::ostringstream os;
  os << "(" << a << "," << b << "," << c << ")";
  return os.str();
}

std::optional<Error> law_violation(std::size_t n, Index identity,
                                   std::vector<Index> const& t) {
  if (n == 0) return Error(ErrorCode::IndexOutOfRange, "empty monoid");
  if (identity >= n)
    return Error(ErrorCode::IndexOutOfRange, "identity out of range");
  for (Index v : t) {
    if (v >= n)
      return Error(ErrorCode::IndexOutOfRange, "table entry out of range");
  }
  for (Index m = 0; m < n; ++m) {
    if (t[identity * n + m] != m || t[m * n + identity] != m) {
      return Error(ErrorCode::BadIdentity,
                   "identity law fails at element " + std::to_string(m), {m});
    }
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      Index ab = t[a * n + b];
      for (Index c = 0; c < n; ++c) {
        if (t[ab * n + c] != t[a * n + t[b * n + c]]) {
          return Error(ErrorCode::NotAssociative,
                       "(a*b)*c != a*(b*c) at " + triple(a, b, c), {a, b, c});
        }
      }
    }
  }
  return std::nullopt;
}

bool is_associative(std::size_t n, std::vector<Index> const& t) {
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      Index ab = t[a * n + b];
      for (Index c = 0; c < n; ++c)
        if (t[ab * n + c] != t[a * n + t[b * n + c]]) return false;
    }
  return true;
}

}  // namespace

FiniteMonoid FiniteMonoid::from_flat(std::size_t size, Index identity,
                                     std::vector<Index> table,
                                     std::vector<std::string> names) {
  if (table.size() != size * size)
    throw Error(ErrorCode::ShapeMismatch, "table is not square");
  if (!names.empty() && names.size() != size)
    throw Error(ErrorCode::ShapeMismatch, "names length differs from size");
  if (auto err = law_violation(size, identity, table)) throw *err;
  return FiniteMonoid(size, identity, std::move(table), std::move(names));
}

FiniteMonoid FiniteMonoid::from_table(
    std::vector<std::vector<Index>> const& table, Index identity,
    std::vector<std::string> names) {
  std::size_t n = table.size();
  std::vector<Index> flat;
  flat.reserve(n * n);
  for (auto const& row : table) {
    if (row.size() != n)
      throw Error(ErrorCode::ShapeMismatch, "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_flat(n, identity, std::move(flat), std::move(names));
}

std::vector<std::vector<Index>> FiniteMonoid::table() const {
  std::vector<std::vector<Index>> rows(size_);
  for (Index a = 0; a < size_; ++a) rows[a].assign(row(a).begin(), row(a).end());
  return rows;
}

std::string FiniteMonoid::label(Index a) const {
  return names_.empty() ? std::to_string(a) : names_[a];
}

Index FiniteMonoid::power(Index m, std::size_t k) const {
  Index r = identity_;
  for (std::size_t i = 0; i < k; ++i) r = mul(r, m);
  return r;
}

FiniteMonoid validate_monoid(std::vector<std::vector<Index>> const& table,
                             Index identity) {
  return FiniteMonoid::from_table(table, identity);
}

bool is_hom(FiniteMonoid const& source, FiniteMonoid const& target,
            std::span<Index const> mapping) {
  if (mapping.size() != source.size()) return false;
  for (Index v : mapping)
    if (v >= target.size()) return false;
  if (mapping[source.identity()] != target.identity()) return false;
  for (Index a = 0; a < source.size(); ++a)
    for (Index b = 0; b < source.size(); ++b)
      if (mapping[source.mul(a, b)] != target.mul(mapping[a], mapping[b]))
        return false;
  return true;
}

MonoidHom make_hom(FiniteMonoid source, FiniteMonoid target,
                   std::vector<Index> mapping) {
  if (!is_hom(source, target, mapping))
    throw Error(ErrorCode::InvalidHom, "mapping is not a monoid homomorphism");
  return MonoidHom{std::move(source), std::move(target), std::move(mapping)};
}

MonoidHom compose(MonoidHom const& outer, MonoidHom const& inner) {
  if (!(inner.target == outer.source))
    throw Error(ErrorCode::MonoidMismatch, "homomorphisms are not composable");
  std::vector<Index> mapping(inner.mapping.size());
  for (Index a = 0; a < mapping.size(); ++a)
    mapping[a] = outer.mapping[inner.mapping[a]];
  return MonoidHom{inner.source, outer.target, std::move(mapping)};
}

// ---------------------------------------------------------------------------
// Submonoids

bool Submonoid::contains(Index parent_element) const {
  return std::binary_search(elements.begin(), elements.end(), parent_element);
}

Index Submonoid::local_index(Index parent_element) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), parent_element);
  if (it == elements.end() || *it != parent_element)
    throw Error(ErrorCode::SubmonoidMismatch,
                "element " + std::to_string(parent_element) +
                    " is not in the submonoid");
  return static_cast<Index>(it - elements.begin());
}

Submonoid make_submonoid(FiniteMonoid const& parent,
                         std::vector<Index> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (Index e : elements)
    if (e >= parent.size())
      throw Error(ErrorCode::IndexOutOfRange,
                  "submonoid element " + std::to_string(e) + " out of range");
  if (!std::binary_search(elements.begin(), elements.end(), parent.identity()))
    throw Error(ErrorCode::SubmonoidMismatch,
                "submonoid does not contain the identity");
  std::size_t k = elements.size();
  std::vector<Index> flat(k * k);
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) {
      Index p = parent.mul(elements[i], elements[j]);
      auto it = std::lower_bound(elements.begin(), elements.end(), p);
      if (it == elements.end() || *it != p)
        throw Error(ErrorCode::SubmonoidMismatch,
                    "subset not closed: " + std::to_string(elements[i]) + "*" +
                        std::to_string(elements[j]) + "=" + std::to_string(p),
                    {elements[i], elements[j]});
      flat[i * k + j] = static_cast<Index>(it - elements.begin());
    }
  }
  Index local_identity = static_cast<Index>(
      std::lower_bound(elements.begin(), elements.end(), parent.identity()) -
      elements.begin());
  std::vector<std::string> names;
  if (!parent.names().empty())
    for (Index e : elements) names.push_back(parent.names()[e]);
  FiniteMonoid embedded =
      FiniteMonoid::from_flat(k, local_identity, std::move(flat), std::move(names));
  MonoidHom inclusion{embedded, parent, elements};
  return Submonoid{parent, std::move(elements), std::move(embedded),
                   std::move(inclusion)};
}

Submonoid submonoid_generated(FiniteMonoid const& monoid,
                              std::vector<Index> const& generators) {
  for (Index g : generators)
    if (g >= monoid.size())
      throw Error(ErrorCode::IndexOutOfRange,
                  "generator " + std::to_string(g) + " out of range");
  std::vector<bool> in(monoid.size(), false);
  std::vector<Index> members{monoid.identity()};
  in[monoid.identity()] = true;
  // Right-multiplying by generators reaches every product of generators.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Index g : generators) {
      Index p = monoid.mul(members[i], g);
      if (!in[p]) {
        in[p] = true;
        members.push_back(p);
      }
    }
  }
  return make_submonoid(monoid, std::move(members));
}

Submonoid trivial_submonoid(FiniteMonoid const& monoid) {
  return make_submonoid(monoid, {monoid.identity()});
}

Submonoid full_submonoid(FiniteMonoid const& monoid) {
  std::vector<Index> all(monoid.size());
  for (Index i = 0; i < all.size(); ++i) all[i] = i;
  return make_submonoid(monoid, std::move(all));
}

bool subset_order(std::vector<Index> const& a, std::vector<Index> const& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<Submonoid> all_submonoids(FiniteMonoid const& monoid,
                                      Bounds const& bounds) {
  std::size_t n = monoid.size();
  if (n > bounds.max_submonoid_order || n >= 8 * sizeof(unsigned long long))
    throw Error(ErrorCode::SizeBoundExceeded,
                "all_submonoids: monoid order " + std::to_string(n) +
                    " exceeds bound " + std::to_string(bounds.max_submonoid_order));
  std::vector<std::vector<Index>> subsets;
  unsigned long long const e_bit = 1ULL << monoid.identity();
  for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
    if (!(mask & e_bit)) continue;
    bool closed = true;
    for (Index a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1ULL)) continue;
      for (Index b = 0; b < n; ++b) {
        if ((mask >> b & 1ULL) && !(mask >> monoid.mul(a, b) & 1ULL)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<Index> s;
    for (Index a = 0; a < n; ++a)
      if (mask >> a & 1ULL) s.push_back(a);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), subset_order);
  std::vector<Submonoid> out;
  out.reserve(subsets.size());
  for (auto& s : subsets) out.push_back(make_submonoid(monoid, std::move(s)));
  return out;
}

std::vector<Index> idempotents(FiniteMonoid const& monoid) {
  std::vector<Index> out;
  for (Index m = 0; m < monoid.size(); ++m)
    if (monoid.mul(m, m) == m) out.push_back(m);
  return out;
}

IndexPeriod index_period(FiniteMonoid const& monoid, Index m) {
  if (m >= monoid.size())
    throw Error(ErrorCode::IndexOutOfRange, "element out of range");
  std::vector<std::size_t> first_seen(monoid.size(), static_cast<std::size_t>(-1));
  Index current = monoid.identity();
  for (std::size_t k = 0;; ++k) {
    if (first_seen[current] != static_cast<std::size_t>(-1))
      return {first_seen[current], k - first_seen[current]};
    first_seen[current] = k;
    current = monoid.mul(current, m);
  }
}

// ---------------------------------------------------------------------------
// Congruences

std::vector<std::vector<Index>> Congruence::classes() const {
  std::vector<std::vector<Index>> out;
  std::vector<Index> slot(representative.size(), static_cast<Index>(-1));
  for (Index a = 0; a < representative.size(); ++a) {
    Index r = representative[a];
    if (slot[r] == static_cast<Index>(-1)) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(a);
  }
  return out;
}

Congruence congruence_closure(
    FiniteMonoid const& monoid,
    std::vector<std::pair<Index, Index>> const& pairs) {
  std::size_t n = monoid.size();
  detail::UnionFind uf(n);
  std::vector<std::pair<Index, Index>> work;
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n)
      throw Error(ErrorCode::IndexOutOfRange, "congruence pair out of range");
    work.emplace_back(a, b);
  }
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    if (!uf.unite(a, b)) continue;
    for (Index c = 0; c < n; ++c) {
      work.emplace_back(monoid.mul(a, c), monoid.mul(b, c));
      work.emplace_back(monoid.mul(c, a), monoid.mul(c, b));
    }
  }
  return Congruence{monoid, uf.representatives()};
}

QuotientMonoid quotient_monoid(FiniteMonoid const& monoid,
                               Congruence const& congruence) {
  if (!(congruence.monoid == monoid))
    throw Error(ErrorCode::MonoidMismatch, "congruence is over another monoid");
  std::size_t n = monoid.size();
  auto const& rep = congruence.representative;
  Index const id_rep = rep[monoid.identity()];
  std::vector<Index> class_of_rep(n, static_cast<Index>(-1));
  std::vector<Index> reps{id_rep};
  class_of_rep[id_rep] = 0;
  for (Index a = 0; a < n; ++a) {
    if (rep[a] == a && a != id_rep) {
      class_of_rep[a] = reps.size();
      reps.push_back(a);
    }
  }
  std::size_t k = reps.size();
  std::vector<Index> flat(k * k);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j)
      flat[i * k + j] = class_of_rep[rep[monoid.mul(reps[i], reps[j])]];
  FiniteMonoid q = FiniteMonoid::from_flat(k, 0, std::move(flat));
  std::vector<Index> projection(n);
  for (Index a = 0; a < n; ++a) projection[a] = class_of_rep[rep[a]];
  return {q, make_hom(monoid, q, std::move(projection))};
}

// ---------------------------------------------------------------------------
// Oracles

std::vector<MonoidHom> monoid_homs(FiniteMonoid const& source,
                                   FiniteMonoid const& target,
                                   Bounds const& bounds) {
  if (source.size() > bounds.max_hom_order || target.size() > bounds.max_hom_order)
    throw Error(ErrorCode::SizeBoundExceeded,
                "monoid_homs: operand order exceeds bound " +
                    std::to_string(bounds.max_hom_order));
  std::size_t n = source.size();
  constexpr Index unset = static_cast<Index>(-1);
  std::vector<Index> mapping(n, unset);
  mapping[source.identity()] = target.identity();
  std::vector<MonoidHom> out;

  auto consistent = [&]() {
    for (Index a = 0; a < n; ++a) {
      if (mapping[a] == unset) continue;
      for (Index b = 0; b < n; ++b) {
        if (mapping[b] == unset) continue;
        Index ab = mapping[source.mul(a, b)];
        if (ab != unset && ab != target.mul(mapping[a], mapping[b])) return false;
      }
    }
    return true;
  };

  std::function<void(Index)> extend = [&](Index a) {
    if (a == n) {
      out.push_back(MonoidHom{source, target, mapping});
      return;
    }
    if (a == source.identity()) {
      extend(a + 1);
      return;
    }
    for (Index v = 0; v < target.size(); ++v) {
      mapping[a] = v;
      if (consistent()) extend(a + 1);
    }
    mapping[a] = unset;
  };
  if (consistent()) extend(0);
  return out;
}

std::vector<FiniteMonoid> enumerate_monoids(std::size_t n, Bounds const& bounds) {
  if (n == 0 || n > bounds.max_enum_order)
    throw Error(ErrorCode::SizeBoundExceeded,
                "enumerate_monoids: order must be in 1.." +
                    std::to_string(bounds.max_enum_order));
  std::vector<Index> t(n * n, 0);
  for (Index m = 0; m < n; ++m) {
    t[m] = m;
    t[m * n] = m;
  }
  std::vector<Index> free_cells;
  for (Index a = 1; a < n; ++a)
    for (Index b = 1; b < n; ++b) free_cells.push_back(a * n + b);

  std::vector<FiniteMonoid> out;
  std::function<void(std::size_t)> fill = [&](std::size_t cell) {
    if (cell == free_cells.size()) {
      if (is_associative(n, t)) out.push_back(FiniteMonoid::from_flat(n, 0, t));
      return;
    }
    for (Index v = 0; v < n; ++v) {
      t[free_cells[cell]] = v;
      fill(cell + 1);
    }
  };
  fill(0);
  return out;
}

bool is_group(FiniteMonoid const& monoid) {
  std::size_t n = monoid.size();
  std::vector<bool> seen(n);
  for (Index a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (Index b : monoid.row(a)) {
      if (seen[b]) return false;
      seen[b] = true;
    }
  }
  return true;
}

Index inverse(FiniteMonoid const& group, Index g) {
  for (Index h = 0; h < group.size(); ++h)
    if (group.mul(g, h) == group.identity() && group.mul(h, g) == group.identity())
      return h;
  throw Error(ErrorCode::NotAGroup,
              "element " + std::to_string(g) + " has no inverse");
}

}  // namespace symrep
