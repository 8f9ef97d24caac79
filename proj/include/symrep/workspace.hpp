#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "symrep/dynamics.hpp"
#include "symrep/kan.hpp"
#include "symrep/text_format.hpp"

namespace symrep {

// Input files are structured-text documents whose first field is `kind:`.
//
//   kind: monoid     size, identity, table (block), optional names
//   kind: mset       monoid (path), optional submonoid (inline list; the set is
//                    then over that submonoid), size, action (block, one row
//                    per monoid element), optional names
//   kind: map        source (path), target (path), mapping (inline list)
//   kind: family     monoid (path), then repeated `submonoid:` entries, each
//                    optionally followed by `subgroups: full` or a block of
//                    subgroup element lists over the computed completion
//   kind: graph      size, step (inline list)
//
// Paths are resolved relative to the referencing file.

FiniteMonoid monoid_from_document(Document const& doc);
Document monoid_to_document(FiniteMonoid const& monoid);
FunctionalGraph graph_from_document(Document const& doc);
Document graph_to_document(FunctionalGraph const& fg);

struct LoadedMSet {
  FinMSet mset;
  FiniteMonoid ambient;              // the monoid file's monoid
  std::optional<Submonoid> over;     // set when the file declares `submonoid:`
};

/// Loaded inputs, keyed by canonical path per kind. Cross references are
/// resolved and validated at load time.
class Workspace {
 public:
  explicit Workspace(Bounds bounds = {}) : bounds_(bounds) {}

  FiniteMonoid const& monoid(std::filesystem::path const& path);
  LoadedMSet const& mset(std::filesystem::path const& path);
  EqMap const& map(std::filesystem::path const& path);
  FamilyZY const& family(std::filesystem::path const& path);
  FunctionalGraph const& graph(std::filesystem::path const& path);

  Bounds const& bounds() const { return bounds_; }

 private:
  Document load(std::filesystem::path const& path, std::string_view kind);

  Bounds bounds_;
  std::map<std::string, FiniteMonoid> monoids_;
  std::map<std::string, LoadedMSet> msets_;
  std::map<std::string, EqMap> maps_;
  std::map<std::string, FamilyZY> families_;
  std::map<std::string, FunctionalGraph> graphs_;
};

/// Command output: the echoed command, a payload document and diagnostics.
struct Report {
  std::vector<std::string> command;
  Document payload;
  std::vector<std::vector<std::string>> diagnostics;

  Document to_document() const;
  /// Inverse of to_document; throws ParseError on malformed reports.
  static Report from_document(Document const& doc);
  std::string to_text() const { return to_document().print(); }
  /// JSON rendering: an object with the same keys in the same order. Integer
  /// tokens become numbers; a single-token inline field is a scalar, other
  /// inline fields are arrays, blocks are arrays of arrays.
  std::string to_tree() const;

  friend bool operator==(Report const& a, Report const& b) {
    return a.command == b.command && a.payload == b.payload && a.diagnostics == b.diagnostics;
  }
};

}  // namespace symrep
