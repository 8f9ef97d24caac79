#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symrep/errors.hpp"

namespace symrep {

/// One `key:` entry of a structured-text document.
///
///     key: tok tok tok        inline form, exactly one row
///     key:                    block form, zero or more indented rows
///       tok tok
///       tok tok
///
/// Keys are `[a-z][a-z0-9-]*` and start in column 1. Tokens are runs of
/// non-whitespace characters other than `#`. Lines whose first non-blank
/// character is `#` are comments.
struct Field {
  std::string key;
  std::vector<std::vector<std::string>> rows;
  bool inline_row = false;

  // Source positions (1-based) for diagnostics; not part of equality.
  std::size_t line = 0;
  std::vector<std::size_t> row_lines;
  std::vector<std::vector<std::size_t>> token_columns;

  friend bool operator==(Field const& a, Field const& b) {
    return a.key == b.key && a.rows == b.rows && a.inline_row == b.inline_row;
  }
};

class Document {
 public:
  /// Throws ParseError("line L, column C: ...").
  static Document parse(std::string_view text);
  std::string print() const;

  std::vector<Field> const& fields() const noexcept { return fields_; }
  Field const* find(std::string_view key) const;
  std::vector<Field const*> find_all(std::string_view key) const;
  /// Throws ParseError naming the missing key.
  Field const& require(std::string_view key) const;

  /// Inline field; an empty row is stored as an empty block so that printing
  /// and re-parsing give the same document.
  Document& add(std::string key, std::vector<std::string> row);
  Document& add(std::string key, std::string value);
  /// Block field. Rows that are all empty (e.g. the action of an empty set)
  /// collapse to an empty block, which is what re-parsing yields.
  Document& add_block(std::string key, std::vector<std::vector<std::string>> rows);
  Document& append(Field field);

  friend bool operator==(Document const& a, Document const& b) { return a.fields_ == b.fields_; }

 private:
  std::vector<Field> fields_;
};

/// ParseError located at a token of a field.
[[noreturn]] void fail_at(Field const& field, std::size_t row, std::size_t token,
                          std::string const& message);
[[noreturn]] void fail_at(Field const& field, std::string const& message);

Index parse_index(Field const& field, std::size_t row, std::size_t token);
std::vector<Index> parse_index_row(Field const& field, std::size_t row);
/// The single inline row of a field as integers.
std::vector<Index> parse_index_list(Field const& field);
Index parse_single_index(Field const& field);
std::vector<std::vector<Index>> parse_index_matrix(Field const& field);
std::string single_token(Field const& field);

std::vector<std::string> to_tokens(std::vector<Index> const& values);
std::vector<std::vector<std::string>> to_token_rows(std::vector<std::vector<Index>> const& rows);
/// "{0,2}" style rendering of an index set, used inside single tokens.
std::string braced(std::vector<Index> const& values);
/// "[0,2]" style rendering of an index sequence.
std::string bracketed(std::vector<Index> const& values);

}  // namespace symrep
