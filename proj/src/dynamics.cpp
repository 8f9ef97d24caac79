#include "symrep/dynamics.hpp"

#include <algorithm>
#include <map>

namespace symrep {
namespace {

constexpr Index kNone = static_cast<Index>(-1);

std::vector<Index> positions(std::vector<Index> const& states, std::size_t universe) {
  std::vector<Index> pos(universe, kNone);
  for (Index i = 0; i < states.size(); ++i) pos[states[i]] = i;
  return pos;
}

}  // namespace

FunctionalGraph make_functional_graph(std::vector<Index> step) {
  for (Index v : step)
    if (v >= step.size())
      throw Error(ErrorCode::IndexOutOfRange, "step value " + std::to_string(v) + " out of range");
  return FunctionalGraph{std::move(step)};
}

FunctionalGraph tower(std::size_t n) {
  std::vector<Index> step(n + 1);
  for (Index k = 0; k <= n; ++k) step[k] = k == 0 ? 0 : k - 1;
  return FunctionalGraph{std::move(step)};
}

std::vector<std::size_t> ZSet::cycle_type() const {
  std::vector<bool> seen(size(), false);
  std::vector<std::size_t> lengths;
  for (Index i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Index j = i; !seen[j]; j = shift[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

ZSet make_zset(std::vector<Index> points, std::vector<Index> shift) {
  if (points.size() != shift.size())
    throw Error(ErrorCode::ShapeMismatch, "ZSet points and shift differ in length");
  std::vector<bool> hit(shift.size(), false);
  for (Index v : shift) {
    if (v >= shift.size() || hit[v])
      throw Error(ErrorCode::NotEquivariant, "ZSet shift is not a bijection");
    hit[v] = true;
  }
  return ZSet{std::move(points), std::move(shift)};
}

std::optional<std::vector<Index>> zset_isomorphism(ZSet const& a, ZSet const& b) {
  if (a.cycle_type() != b.cycle_type()) return std::nullopt;
  // Pair cycles of equal length and align them from their first elements.
  auto cycles_of = [](ZSet const& z) {
    std::vector<bool> seen(z.size(), false);
    std::multimap<std::size_t, Index> starts;
    for (Index i = 0; i < z.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (Index j = i; !seen[j]; j = z.shift[j]) {
        seen[j] = true;
        ++len;
      }
      starts.emplace(len, i);
    }
    return starts;
  };
  auto ca = cycles_of(a), cb = cycles_of(b);
  std::vector<Index> iso(a.size(), kNone);
  for (auto ia = ca.begin(), ib = cb.begin(); ia != ca.end(); ++ia, ++ib) {
    Index x = ia->second, y = ib->second;
    for (std::size_t k = 0; k < ia->first; ++k) {
      iso[x] = y;
      x = a.shift[x];
      y = b.shift[y];
    }
  }
  return iso;
}

EventualImage eventual_image(FunctionalGraph const& fg) {
  std::size_t n = fg.size();
  std::vector<bool> current(n, true);
  std::size_t count = n;
  while (true) {
    std::vector<bool> next(n, false);
    for (Index a = 0; a < n; ++a)
      if (current[a]) next[fg.step[a]] = true;
    std::size_t next_count = static_cast<std::size_t>(std::count(next.begin(), next.end(), true));
    current = std::move(next);
    if (next_count == count) break;
    count = next_count;
  }
  EventualImage out;
  for (Index a = 0; a < n; ++a)
    if (current[a]) out.states.push_back(a);
  auto pos = positions(out.states, n);
  for (Index a : out.states) out.restriction.push_back(pos[fg.step[a]]);
  return out;
}

ZSet rinv_nat(FunctionalGraph const& fg) {
  std::size_t n = fg.size();
  std::vector<Index> cyclic;
  for (Index a = 0; a < n; ++a) {
    Index x = fg.step[a];
    for (std::size_t k = 0; k < n && x != a; ++k) x = fg.step[x];
    if (x == a) cyclic.push_back(a);
  }
  auto pos = positions(cyclic, n);
  std::vector<Index> shift;
  for (Index a : cyclic) shift.push_back(pos[fg.step[a]]);
  return make_zset(std::move(cyclic), std::move(shift));
}

LinvNat linv_nat(FunctionalGraph const& fg) {
  std::size_t n = fg.size();
  // step^n lands every state in the eventual image.
  std::vector<Index> deep(n);
  for (Index a = 0; a < n; ++a) {
    Index x = a;
    for (std::size_t k = 0; k < n; ++k) x = fg.step[x];
    deep[a] = x;
  }
  std::vector<bool> is_target(n, false);
  for (Index a = 0; a < n; ++a) is_target[deep[a]] = true;
  std::vector<Index> classes;
  for (Index a = 0; a < n; ++a)
    if (is_target[a]) classes.push_back(a);
  auto pos = positions(classes, n);
  std::vector<Index> shift, inverse(classes.size());
  for (Index i = 0; i < classes.size(); ++i) {
    shift.push_back(pos[fg.step[classes[i]]]);
    inverse[shift.back()] = i;
  }
  // [0, a] = [-n, step^n(a)] = [0, shift^{-n}(step^n(a))].
  std::vector<Index> unit(n);
  for (Index a = 0; a < n; ++a) {
    Index p = pos[deep[a]];
    for (std::size_t k = 0; k < n; ++k) p = inverse[p];
    unit[a] = p;
  }
  return LinvNat{make_zset(std::move(classes), std::move(shift)), std::move(unit)};
}

LimitCycles limit_cycles(FunctionalGraph const& fg) {
  EventualImage image = eventual_image(fg);
  std::size_t n = fg.size();
  std::vector<bool> in_image(n, false);
  for (Index a : image.states) in_image[a] = true;
  LimitCycles out;
  std::vector<bool> seen(n, false);
  for (Index a : image.states) {
    if (seen[a]) continue;
    std::vector<Index> cycle;
    for (Index x = a; !seen[x]; x = fg.step[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.cycles.push_back(std::move(cycle));
  }
  out.transient.resize(n);
  for (Index a = 0; a < n; ++a) {
    std::size_t k = 0;
    for (Index x = a; !in_image[x]; x = fg.step[x]) ++k;
    out.transient[a] = k;
  }
  return out;
}

TransitionMonoid transition_monoid(FunctionalGraph const& fg, Bounds const& bounds) {
  std::size_t n = fg.size();
  std::vector<Index> identity(n);
  for (Index a = 0; a < n; ++a) identity[a] = a;
  std::vector<std::vector<Index>> iterates{identity};
  std::map<std::vector<Index>, Index> seen{{identity, 0}};
  std::size_t index = 0, period = 0;
  while (true) {
    std::vector<Index> next(n);
    for (Index a = 0; a < n; ++a) next[a] = fg.step[iterates.back()[a]];
    auto it = seen.find(next);
    if (it != seen.end()) {
      index = it->second;
      period = iterates.size() - it->second;
      break;
    }
    if (iterates.size() >= bounds.max_transition_order)
      throw Error(ErrorCode::SizeBoundExceeded,
                  "transition monoid has more than " + std::to_string(bounds.max_transition_order) +
                      " elements");
    seen.emplace(next, iterates.size());
    iterates.push_back(std::move(next));
  }
  std::size_t size = iterates.size();
  // f^i ∘ f^j = f^(i+j), folded back into [index, index + period).
  auto reduce = [&](std::size_t e) { return e < size ? e : index + (e - index) % period; };
  std::vector<Index> table(size * size);
  for (Index i = 0; i < size; ++i)
    for (Index j = 0; j < size; ++j) table[i * size + j] = reduce(i + j);
  FiniteMonoid monoid = FiniteMonoid::from_flat(size, 0, std::move(table));
  std::vector<Index> action;
  for (auto const& it : iterates) action.insert(action.end(), it.begin(), it.end());
  FinMSet mset = FinMSet::from_flat(monoid, n, std::move(action));
  return TransitionMonoid{std::move(monoid), std::move(mset), size > 1 ? Index{1} : Index{0}};
}

DynSystem make_dyn_system(std::vector<std::string> parameters, std::size_t states,
                          std::vector<std::vector<Index>> step) {
  if (step.size() != parameters.size())
    throw Error(ErrorCode::ShapeMismatch, "one step function per parameter required");
  for (auto const& s : step) {
    if (s.size() != states) throw Error(ErrorCode::ShapeMismatch, "step function has wrong length");
    for (Index v : s)
      if (v >= states) throw Error(ErrorCode::IndexOutOfRange, "step value out of range");
  }
  return DynSystem{std::move(parameters), states, std::move(step)};
}

DynSystem dyn_system(FunctionalGraph const& fg, std::string parameter) {
  return make_dyn_system({std::move(parameter)}, fg.size(), {fg.step});
}

DynMorphism validate_dyn_morphism(DynSystem const& source, DynSystem const& target,
                                  std::vector<Index> parameter_map,
                                  std::vector<Index> state_map) {
  if (parameter_map.size() != source.parameters.size() || state_map.size() != source.states)
    throw Error(ErrorCode::ShapeMismatch, "morphism components have wrong length");
  for (Index v : parameter_map)
    if (v >= target.parameters.size()) throw Error(ErrorCode::ShapeMismatch, "parameter out of range");
  for (Index v : state_map)
    if (v >= target.states) throw Error(ErrorCode::ShapeMismatch, "state out of range");
  for (Index s = 0; s < source.parameters.size(); ++s)
    for (Index a = 0; a < source.states; ++a)
      if (state_map[source.step[s][a]] != target.step[parameter_map[s]][state_map[a]])
        throw Error(ErrorCode::NotEquivariant,
                    "f(s·a) != υ(s)·f(a) at s=" + std::to_string(s) + " a=" + std::to_string(a),
                    {s, a});
  return DynMorphism{source, target, std::move(parameter_map), std::move(state_map)};
}

DynMorphism identity_dyn(DynSystem const& d) {
  std::vector<Index> params(d.parameters.size()), states(d.states);
  for (Index i = 0; i < params.size(); ++i) params[i] = i;
  for (Index i = 0; i < states.size(); ++i) states[i] = i;
  return validate_dyn_morphism(d, d, std::move(params), std::move(states));
}

DynMorphism compose_dyn(DynMorphism const& first, DynMorphism const& second) {
  if (first.target.parameters != second.source.parameters || first.target.states != second.source.states ||
      first.target.step != second.source.step)
    throw Error(ErrorCode::ShapeMismatch, "dynamical morphisms are not composable");
  std::vector<Index> params(first.parameter_map.size()), states(first.state_map.size());
  for (Index i = 0; i < params.size(); ++i) params[i] = second.parameter_map[first.parameter_map[i]];
  for (Index i = 0; i < states.size(); ++i) states[i] = second.state_map[first.state_map[i]];
  return DynMorphism{first.source, second.target, std::move(params), std::move(states)};
}

}  // namespace symrep
