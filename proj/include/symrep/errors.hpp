#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symrep {

using Index = std::size_t;

enum class ErrorCode {
  IndexOutOfRange,
  ShapeMismatch,
  NotAssociative,
  BadIdentity,
  SizeBoundExceeded,
  InvalidHom,
  TargetNotGroup,
  NotAGroup,
  NotASubgroup,
  IdentityLawViolated,
  CompatibilityViolated,
  NotEquivariant,
  MonoidMismatch,
  SubmonoidMismatch,
  CompletionMismatch,
  FamilyInvalid,
  ObjectNotFound,
  ParseError,
  Usage,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type. `witness` carries the
// offending indices where one exists (e.g. the triple for NotAssociative).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& message,
        std::vector<Index> witness = {});

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix that what() carries.
  std::string const& message() const noexcept { return message_; }
  std::vector<Index> const& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::vector<Index> witness_;
};

// Enumeration and size limits. The defaults are the desk-scale bounds the
// brute-force oracles are designed around; every one is configurable.
struct Bounds {
  std::size_t max_submonoid_order = 12;  // all_submonoids
  std::size_t max_enum_order = 4;        // enumerate_monoids
  std::size_t max_hom_order = 8;         // monoid_homs
  std::size_t max_subgroup_order = 24;   // all_subgroups
  std::size_t max_orbit_all_order = 8;   // build_orbit_category("all")
  std::size_t max_transition_order = 12; // transition_monoid
  std::size_t max_enum = 1'000'000;      // search-space budget for map enumeration
};

}  // namespace symrep
