#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symrep/errors.hpp"

namespace symrep {

/// A finite monoid given by its multiplication table. Row `a`, column `b`
/// holds `a * b`. Instances are only obtainable through validation, so every
/// value satisfies the identity and associativity laws.
class FiniteMonoid {
 public:
  /// Validates a square table. Throws IndexOutOfRange, BadIdentity or
  /// NotAssociative (witness = the offending triple).
  static FiniteMonoid from_table(std::vector<std::vector<Index>> const& table,
                                 Index identity,
                                 std::vector<std::string> names = {});
  static FiniteMonoid from_flat(std::size_t size, Index identity,
                                std::vector<Index> table,
                                std::vector<std::string> names = {});

  std::size_t size() const noexcept { return size_; }
  Index identity() const noexcept { return identity_; }
  Index mul(Index a, Index b) const { return table_[a * size_ + b]; }
  std::span<Index const> row(Index a) const {
    return {table_.data() + a * size_, size_};
  }
  std::vector<Index> const& flat_table() const noexcept { return table_; }
  std::vector<std::vector<Index>> table() const;

  /// Optional element labels; empty when the input carried none.
  std::vector<std::string> const& names() const noexcept { return names_; }
  std::string label(Index a) const;

  /// m^k with m^0 = identity.
  Index power(Index m, std::size_t k) const;

  /// Structural equality of the algebra; labels are ignored.
  friend bool operator==(FiniteMonoid const& a, FiniteMonoid const& b) {
    return a.size_ == b.size_ && a.identity_ == b.identity_ &&
           a.table_ == b.table_;
  }

 private:
  FiniteMonoid(std::size_t size, Index identity, std::vector<Index> table,
               std::vector<std::string> names)
      : size_(size),
        identity_(identity),
        table_(std::move(table)),
        names_(std::move(names)) {}

  std::size_t size_;
  Index identity_;
  std::vector<Index> table_;
  std::vector<std::string> names_;
};

FiniteMonoid validate_monoid(std::vector<std::vector<Index>> const& table,
                             Index identity);

/// Homomorphism of finite monoids; `mapping[a]` is the image of `a`.
struct MonoidHom {
  FiniteMonoid source;
  FiniteMonoid target;
  std::vector<Index> mapping;

  Index operator()(Index a) const { return mapping[a]; }
};

/// Throws InvalidHom unless identity and multiplication are preserved.
MonoidHom make_hom(FiniteMonoid source, FiniteMonoid target,
                   std::vector<Index> mapping);
bool is_hom(FiniteMonoid const& source, FiniteMonoid const& target,
            std::span<Index const> mapping);
/// outer ∘ inner.
MonoidHom compose(MonoidHom const& outer, MonoidHom const& inner);

struct Submonoid {
  FiniteMonoid parent;
  std::vector<Index> elements;  // sorted, contains parent.identity()
  FiniteMonoid embedded;        // indexed by position in `elements`
  MonoidHom inclusion;          // embedded -> parent

  bool contains(Index parent_element) const;
  /// Position of a parent element inside `elements`; throws SubmonoidMismatch.
  Index local_index(Index parent_element) const;
  bool is_trivial() const { return elements.size() == 1; }
  bool is_full() const { return elements.size() == parent.size(); }
};

/// Throws SubmonoidMismatch when `elements` misses the identity or is not
/// closed; IndexOutOfRange for bad indices.
Submonoid make_submonoid(FiniteMonoid const& parent,
                         std::vector<Index> elements);
Submonoid submonoid_generated(FiniteMonoid const& monoid,
                              std::vector<Index> const& generators);
Submonoid trivial_submonoid(FiniteMonoid const& monoid);
Submonoid full_submonoid(FiniteMonoid const& monoid);

/// Order on element subsets used everywhere a list of submonoids or
/// subgroups is emitted: smaller sets first, ties broken lexicographically.
bool subset_order(std::vector<Index> const& a, std::vector<Index> const& b);

/// Every submonoid exactly once, in subset_order. Throws SizeBoundExceeded
/// above `bounds.max_submonoid_order`.
std::vector<Submonoid> all_submonoids(FiniteMonoid const& monoid,
                                      Bounds const& bounds = {});

std::vector<Index> idempotents(FiniteMonoid const& monoid);

struct IndexPeriod {
  std::size_t index;
  std::size_t period;
  friend bool operator==(IndexPeriod const&, IndexPeriod const&) = default;
};
/// Minimal (k, p) with m^k = m^(k+p).
IndexPeriod index_period(FiniteMonoid const& monoid, Index m);

/// Two-sided congruence, stored as the minimal-index representative of each
/// element's class.
struct Congruence {
  FiniteMonoid monoid;
  std::vector<Index> representative;

  bool related(Index a, Index b) const {
    return representative[a] == representative[b];
  }
  /// Classes ordered by representative, each sorted.
  std::vector<std::vector<Index>> classes() const;
};

Congruence congruence_closure(
    FiniteMonoid const& monoid,
    std::vector<std::pair<Index, Index>> const& pairs);

struct QuotientMonoid {
  FiniteMonoid monoid;
  MonoidHom projection;
};

/// Quotient by a congruence. The identity class is element 0; the other
/// classes follow in increasing representative order.
QuotientMonoid quotient_monoid(FiniteMonoid const& monoid,
                               Congruence const& congruence);

/// Every homomorphism, in lexicographic order of mappings. Throws
/// SizeBoundExceeded when either side exceeds `bounds.max_hom_order`.
std::vector<MonoidHom> monoid_homs(FiniteMonoid const& source,
                                   FiniteMonoid const& target,
                                   Bounds const& bounds = {});

/// All associative tables of order n with identity 0, in odometer order of the
/// free entries (row-major, entries outside row/column 0). Not reduced by
/// isomorphism.
std::vector<FiniteMonoid> enumerate_monoids(std::size_t n,
                                            Bounds const& bounds = {});

bool is_group(FiniteMonoid const& monoid);

/// Two-sided inverse of `g` in a group; throws NotAGroup when none exists.
Index inverse(FiniteMonoid const& group, Index g);

}  // namespace symrep
