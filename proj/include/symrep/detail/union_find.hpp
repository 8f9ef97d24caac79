#pragma once

#include <numeric>
#include <vector>

#include "symrep/errors.hpp"

namespace symrep::detail {

// Union-find whose root is always the minimal index of its class, so that
// class representatives come out canonical without a second pass.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Index{0});
  }

  Index find(Index x) {
    Index root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      Index next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  // Returns true when two distinct classes were merged.
  bool unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  std::size_t size() const { return parent_.size(); }

  std::vector<Index> representatives() {
    std::vector<Index> rep(parent_.size());
    for (Index i = 0; i < rep.size(); ++i) rep[i] = find(i);
    return rep;
  }

 private:
  std::vector<Index> parent_;
};

// Dense relabelling of a representative map: classes numbered by increasing
// representative. Returns (class index per element, class count).
inline std::pair<std::vector<Index>, std::size_t> number_classes(
    std::vector<Index> const& rep) {
  std::vector<Index> label(rep.size(), 0);
  std::vector<Index> by_rep(rep.size(), static_cast<Index>(-1));
  std::size_t count = 0;
  for (Index i = 0; i < rep.size(); ++i) {
    if (rep[i] == i) by_rep[i] = count++;
  }
  for (Index i = 0; i < rep.size(); ++i) label[i] = by_rep[rep[i]];
  return {label, count};
}

}  // namespace symrep::detail
