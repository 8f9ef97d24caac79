#pragma once

#include <optional>
#include <vector>

#include "symrep/completion.hpp"
#include "symrep/mset.hpp"

namespace symrep {

/// Restriction along q: a G(M)-set viewed as an M-set, m acting as q(m).
/// Throws CompletionMismatch when B is not over the completion's group.
FinMSet qstar(GroupCompletion const& completion, FinMSet const& b);

/// Right symmetric replacement ℛA together with its counit q*ℛA -> A.
struct RinvResult {
  GroupCompletion completion;
  FinMSet gset;  // over completion.group
  EqMap counit;  // q*(gset) -> A, injective
};

/// Left symmetric replacement ℒA together with its unit A -> q*ℒA.
struct LinvResult {
  GroupCompletion completion;
  FinMSet gset;
  EqMap unit;
};

/// ℛA as the subset S = {a : q(m) = q(n) implies m·a = n·a} of A, with
/// q(m)·a := m·a. Each σ in Hom_M(G(M), A) is determined by σ(1), and σ(1)
/// ranges exactly over S because q is onto.
RinvResult rinv(GroupCompletion const& completion, FinMSet const& a);

/// ℛA by definition: all σ: G(M) -> A with σ(q(m)*g) = m·σ(g), acted on by
/// (g·σ)(h) = σ(h*g), counit σ |-> σ(1). Points in lexicographic order of σ.
/// Throws SizeBoundExceeded when |A|^|G(M)| exceeds `bounds.max_enum`.
RinvResult rinv_bruteforce(GroupCompletion const& completion, FinMSet const& a,
                           Bounds const& bounds = {});

/// ℒA = (G(M) × A)/≃ for (g, m·a) ≃ (g*q(m), a); k·[g,a] = [k*g, a]; unit
/// a |-> [1, a]. Points ordered by least encoding g·|A| + a.
LinvResult linv(GroupCompletion const& completion, FinMSet const& a);

/// ℛ^M_N = ℛ ∘ Res^M_N and ℒ^M_N = ℒ ∘ Res^M_N, over G(N).
RinvResult rinv_rel(Submonoid const& n, FinMSet const& a);
LinvResult linv_rel(Submonoid const& n, FinMSet const& a);

/// ℛ(f): σ |-> f∘σ, i.e. the restriction of f to the symmetric subsets.
EqMap rinv_map(RinvResult const& source, RinvResult const& target, EqMap const& f);
/// ℒ(f): [g, a] |-> [g, f(a)].
EqMap linv_map(LinvResult const& source, LinvResult const& target, EqMap const& f);

// ---------------------------------------------------------------------------
// (Z, Y)-families and equivalence verdicts

struct FamilyEntry {
  Submonoid submonoid;
  GroupCompletion completion;               // of submonoid.embedded
  std::vector<std::vector<Index>> subgroups;  // of completion.group, subset_order
};

struct FamilyZY {
  FiniteMonoid monoid;
  std::vector<FamilyEntry> entries;
};

/// Request for one family entry: submonoid elements (parent indices) and an
/// optional subgroup list over its completion; std::nullopt means "full".
struct FamilySpec {
  std::vector<Index> submonoid;
  std::optional<std::vector<std::vector<Index>>> subgroups;
};

/// Builds and validates a family. Every failure (non-closed subset, repeated
/// submonoid, non-subgroup, family not closed under conjugation) is reported
/// as FamilyInvalid.
FamilyZY make_family(FiniteMonoid const& monoid, std::vector<FamilySpec> const& specs,
                     Bounds const& bounds = {});
/// Every submonoid with all subgroups of its completion.
FamilyZY full_family(FiniteMonoid const& monoid, Bounds const& bounds = {});
void validate_family(FamilyZY const& family);

enum class Side { Right, Left };

struct VerdictEntry {
  std::vector<Index> submonoid;
  std::vector<Index> subgroup;
  std::vector<Index> source_fixed;  // H-fixed points of the replacement of f's source
  std::vector<Index> target_fixed;
  std::vector<Index> induced;       // source_fixed[i] |-> target_fixed[induced[i]]
  bool bijective;
};

struct Verdict {
  bool equivalence;
  std::vector<VerdictEntry> entries;
};

/// f is a right-(Z,Y)-equivalence iff ℛ^M_N(f)^H is a bijection for every
/// N in Z and H in Y_N. Discrete spaces: weak equivalence means bijection.
Verdict right_equivalence(EqMap const& f, FamilyZY const& family);
Verdict left_equivalence(EqMap const& f, FamilyZY const& family);
Verdict equivalence(EqMap const& f, FamilyZY const& family, Side side);

// ---------------------------------------------------------------------------
// Generating objects M ×_N q*(G(N)/H)

/// G/H with left translation; cosets ordered by least element.
FinMSet coset_gset(FiniteMonoid const& group, std::vector<Index> const& subgroup);

struct GeneratingObject {
  FinMSet mset;       // over the parent monoid of N
  Index base_point;   // [1, H]
  GroupCompletion completion;  // of N
};

/// Throws NotASubgroup when H is not a subgroup of G(N).
GeneratingObject generating_object(Submonoid const& n, std::vector<Index> const& subgroup);

// ---------------------------------------------------------------------------
// Adjunction checks

struct AdjunctionCheck {
  std::size_t group_side;   // |Hom_G(B, ℛA)| or |Hom_G(ℒA, B)|
  std::size_t monoid_side;  // |Hom_M(q*B, A)| or |Hom_M(A, q*B)|
  bool bijective;
};

/// Composition with the counit, Hom_G(B, ℛA) -> Hom_M(q*B, A), checked to be
/// a bijection by enumerating both sides.
AdjunctionCheck adjunction_check_right(GroupCompletion const& completion, FinMSet const& b,
                                       FinMSet const& a, Bounds const& bounds = {});
/// Composition with the unit, Hom_G(ℒA, B) -> Hom_M(A, q*B).
AdjunctionCheck adjunction_check_left(GroupCompletion const& completion, FinMSet const& b,
                                      FinMSet const& a, Bounds const& bounds = {});

/// All G-maps φ: B -> ℛA with counit ∘ q*(φ) = g. Terminality of the counit
/// means exactly one.
std::vector<std::vector<Index>> counit_factorizations(RinvResult const& r, FinMSet const& b,
                                                      std::vector<Index> const& g,
                                                      Bounds const& bounds = {});
/// All G-maps ψ: ℒA -> B with q*(ψ) ∘ unit = g.
std::vector<std::vector<Index>> unit_factorizations(LinvResult const& l, FinMSet const& b,
                                                    std::vector<Index> const& g,
                                                    Bounds const& bounds = {});

}  // namespace symrep
