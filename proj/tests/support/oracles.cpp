#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace oracles {

bool naive_is_monoid(std::vector<std::vector<Index>> const& t, Index e) {
  std::size_t n = t.size();
  for (Index a = 0; a < n; ++a)
    if (t[e][a] != a || t[a][e] != a) return false;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

namespace {

// Advances a base-`radix` counter; false once it wraps to all zeros.
bool next(std::vector<Index>& digits, std::size_t radix) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < radix) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

std::size_t naive_monoid_count(std::size_t n) {
  std::vector<Index> cells(n * n, 0);
  std::size_t count = 0;
  do {
    std::vector<std::vector<Index>> t(n, std::vector<Index>(n));
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) t[i][j] = cells[i * n + j];
    if (naive_is_monoid(t, 0)) ++count;
  } while (next(cells, n));
  return count;
}

std::size_t naive_mset_count(FiniteMonoid const& m, std::size_t k) {
  if (k == 0) return 1;
  std::size_t n = m.size();
  std::vector<Index> cells(n * k, 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (Index a = 0; a < k && ok; ++a) ok = cells[m.identity() * k + a] == a;
    for (Index x = 0; x < n && ok; ++x)
      for (Index y = 0; y < n && ok; ++y)
        for (Index a = 0; a < k && ok; ++a)
          ok = cells[m.mul(x, y) * k + a] == cells[x * k + cells[y * k + a]];
    if (ok) ++count;
  } while (next(cells, k));
  return count;
}

std::size_t naive_hom_count(FiniteMonoid const& m, FiniteMonoid const& g) {
  std::vector<Index> f(m.size(), 0);
  std::size_t count = 0;
  do {
    bool ok = f[m.identity()] == g.identity();
    for (Index x = 0; x < m.size() && ok; ++x)
      for (Index y = 0; y < m.size() && ok; ++y) ok = f[m.mul(x, y)] == g.mul(f[x], f[y]);
    if (ok) ++count;
  } while (next(f, g.size()));
  return count;
}

std::vector<std::vector<Index>> naive_equivariant(FinMSet const& a, FinMSet const& b) {
  std::vector<std::vector<Index>> out;
  if (a.size() == 0) return {{}};
  if (b.size() == 0) return out;
  std::vector<Index> f(a.size(), 0);
  do {
    bool ok = true;
    for (Index m = 0; m < a.monoid().size() && ok; ++m)
      for (Index x = 0; x < a.size() && ok; ++x) ok = f[a.act(m, x)] == b.act(m, f[x]);
    if (ok) out.push_back(f);
  } while (next(f, b.size()));
  return out;
}

std::vector<Index> naive_symmetric_part(FinMSet const& a) {
  std::set<Index> s;
  for (Index x = 0; x < a.size(); ++x) s.insert(x);
  while (true) {
    std::set<Index> next_s = s;
    for (Index m = 0; m < a.monoid().size(); ++m) {
      std::set<Index> image;
      for (Index x : s) image.insert(a.act(m, x));
      std::set<Index> keep;
      std::set_intersection(next_s.begin(), next_s.end(), image.begin(), image.end(),
                            std::inserter(keep, keep.begin()));
      next_s = keep;
    }
    if (next_s == s) break;
    s = next_s;
  }
  return {s.begin(), s.end()};
}

std::vector<std::vector<Index>> naive_submonoids(FiniteMonoid const& m) {
  std::vector<std::vector<Index>> out;
  std::size_t n = m.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (!(mask >> m.identity() & 1)) continue;
    bool closed = true;
    for (Index x = 0; x < n && closed; ++x)
      for (Index y = 0; y < n && closed; ++y)
        if ((mask >> x & 1) && (mask >> y & 1)) closed = mask >> m.mul(x, y) & 1;
    if (!closed) continue;
    std::vector<Index> s;
    for (Index x = 0; x < n; ++x)
      if (mask >> x & 1) s.push_back(x);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::pair<std::size_t, std::size_t> naive_index_period(FiniteMonoid const& m, Index x) {
  std::vector<Index> powers = {m.identity()};  // powers[i] = x^i
  while (true) {
    Index next_power = m.mul(powers.back(), x);
    for (std::size_t i = 0; i < powers.size(); ++i)
      if (powers[i] == next_power) return {i, powers.size() - i};
    powers.push_back(next_power);
  }
}

std::vector<Index> naive_cyclic_states(symrep::FunctionalGraph const& fg) {
  std::vector<Index> out;
  for (Index s = 0; s < fg.size(); ++s) {
    Index t = fg.step[s];
    for (std::size_t j = 0; j < fg.size() && t != s; ++j) t = fg.step[t];
    if (t == s) out.push_back(s);
  }
  return out;
}

std::vector<Index> naive_eventual_image(symrep::FunctionalGraph const& fg) {
  std::set<Index> s;
  for (Index x = 0; x < fg.size(); ++x) s.insert(x);
  for (std::size_t k = 0; k < fg.size(); ++k) {
    std::set<Index> image;
    for (Index x : s) image.insert(fg.step[x]);
    s = image;
  }
  return {s.begin(), s.end()};
}

std::vector<Index> naive_fixed(FinMSet const& a, std::vector<Index> const& elements) {
  std::vector<Index> out;
  for (Index x = 0; x < a.size(); ++x)
    if (std::all_of(elements.begin(), elements.end(), [&](Index m) { return a.act(m, x) == x; }))
      out.push_back(x);
  return out;
}

}  // namespace oracles
