#include "symrep/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace symrep {
namespace {

[[noreturn]] void fail(std::size_t line, std::size_t column, std::string const& message) {
  throw Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message);
}

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

void tokenize(std::string_view line, std::size_t offset, std::size_t line_no,
              std::vector<std::string>& tokens, std::vector<std::size_t>& columns) {
  std::size_t i = offset;
  while (i < line.size()) {
    while (i < line.size() && is_blank(line[i])) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !is_blank(line[i])) {
      if (line[i] == '#') fail(line_no, i + 1, "'#' is only allowed at the start of a comment line");
      ++i;
    }
    tokens.emplace_back(line.substr(start, i - start));
    columns.push_back(start + 1);
  }
}

bool valid_key(std::string_view key) {
  if (key.empty() || !std::islower(static_cast<unsigned char>(key[0]))) return false;
  for (char c : key)
    if (!(std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '-'))
      return false;
  return true;
}

}  // namespace

Document Document::parse(std::string_view text) {
  Document doc;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  Field* open_block = nullptr;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;

    std::size_t first = 0;
    while (first < line.size() && is_blank(line[first])) ++first;
    if (first == line.size() || line[first] == '#') {
      if (end == text.size()) break;
      continue;
    }

    if (first > 0) {
      if (!open_block) fail(line_no, first + 1, "indented row outside a block field");
      std::vector<std::string> tokens;
      std::vector<std::size_t> columns;
      tokenize(line, first, line_no, tokens, columns);
      open_block->rows.push_back(std::move(tokens));
      open_block->row_lines.push_back(line_no);
      open_block->token_columns.push_back(std::move(columns));
    } else {
      std::size_t colon = line.find(':');
      if (colon == std::string_view::npos) fail(line_no, 1, "expected 'key:'");
      std::string_view key = line.substr(0, colon);
      if (!valid_key(key)) fail(line_no, 1, "invalid key '" + std::string(key) + "'");
      Field field;
      field.key = std::string(key);
      field.line = line_no;
      std::vector<std::string> tokens;
      std::vector<std::size_t> columns;
      tokenize(line, colon + 1, line_no, tokens, columns);
      doc.fields_.push_back(std::move(field));
      Field& added = doc.fields_.back();
      if (tokens.empty()) {
        open_block = &added;
      } else {
        added.inline_row = true;
        added.rows.push_back(std::move(tokens));
        added.row_lines.push_back(line_no);
        added.token_columns.push_back(std::move(columns));
        open_block = nullptr;
      }
    }
    if (end == text.size()) break;
  }
  return doc;
}

std::string Document::print() const {
  std::ostringstream os;
  auto join = [&os](std::vector<std::string> const& row) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
  };
  for (auto const& f : fields_) {
    os << f.key << ":";
    if (f.inline_row) {
      os << " ";
      join(f.rows.front());
      os << "\n";
    } else {
      os << "\n";
      for (auto const& row : f.rows) {
        os << "  ";
        join(row);
        os << "\n";
      }
    }
  }
  return os.str();
}

Field const* Document::find(std::string_view key) const {
  for (auto const& f : fields_)
    if (f.key == key) return &f;
  return nullptr;
}

std::vector<Field const*> Document::find_all(std::string_view key) const {
  std::vector<Field const*> out;
  for (auto const& f : fields_)
    if (f.key == key) out.push_back(&f);
  return out;
}

Field const& Document::require(std::string_view key) const {
  if (auto const* f = find(key)) return *f;
  throw Error(ErrorCode::ParseError, "missing field '" + std::string(key) + "'");
}

Document& Document::add(std::string key, std::vector<std::string> row) {
  Field f;
  f.key = std::move(key);
  if (!row.empty()) {
    f.inline_row = true;
    f.rows.push_back(std::move(row));
  }
  fields_.push_back(std::move(f));
  return *this;
}

Document& Document::add(std::string key, std::string value) {
  return add(std::move(key), std::vector<std::string>{std::move(value)});
}

Document& Document::add_block(std::string key, std::vector<std::vector<std::string>> rows) {
  Field f;
  f.key = std::move(key);
  bool all_empty = std::all_of(rows.begin(), rows.end(), [](auto const& r) { return r.empty(); });
  if (!all_empty) f.rows = std::move(rows);
  fields_.push_back(std::move(f));
  return *this;
}

Document& Document::append(Field field) {
  fields_.push_back(std::move(field));
  return *this;
}

void fail_at(Field const& field, std::size_t row, std::size_t token, std::string const& message) {
  std::size_t line = row < field.row_lines.size() ? field.row_lines[row] : field.line;
  std::size_t column = 1;
  if (row < field.token_columns.size() && token < field.token_columns[row].size())
    column = field.token_columns[row][token];
  fail(line, column, message);
}

void fail_at(Field const& field, std::string const& message) { fail(field.line, 1, message); }

Index parse_index(Field const& field, std::size_t row, std::size_t token) {
  std::string const& text = field.rows.at(row).at(token);
  Index value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    fail_at(field, row, token, "expected a non-negative integer, got '" + text + "'");
  return value;
}

std::vector<Index> parse_index_row(Field const& field, std::size_t row) {
  std::vector<Index> out;
  for (std::size_t t = 0; t < field.rows.at(row).size(); ++t) out.push_back(parse_index(field, row, t));
  return out;
}

std::vector<Index> parse_index_list(Field const& field) {
  if (field.rows.empty()) return {};
  if (!field.inline_row) fail_at(field, "field '" + field.key + "' expects an inline list");
  return parse_index_row(field, 0);
}

Index parse_single_index(Field const& field) {
  if (!field.inline_row || field.rows.front().size() != 1)
    fail_at(field, "field '" + field.key + "' expects a single integer");
  return parse_index(field, 0, 0);
}

std::vector<std::vector<Index>> parse_index_matrix(Field const& field) {
  if (field.inline_row) fail_at(field, "field '" + field.key + "' expects an indented matrix");
  std::vector<std::vector<Index>> out;
  for (std::size_t r = 0; r < field.rows.size(); ++r) out.push_back(parse_index_row(field, r));
  return out;
}

std::string single_token(Field const& field) {
  if (!field.inline_row || field.rows.front().size() != 1)
    fail_at(field, "field '" + field.key + "' expects a single value");
  return field.rows.front().front();
}

std::vector<std::string> to_tokens(std::vector<Index> const& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (Index v : values) out.push_back(std::to_string(v));
  return out;
}

std::vector<std::vector<std::string>> to_token_rows(std::vector<std::vector<Index>> const& rows) {
  std::vector<std::vector<std::string>> out;
  out.reserve(rows.size());
  for (auto const& r : rows) out.push_back(to_tokens(r));
  return out;
}

std::string braced(std::vector<Index> const& values) {
  std::string s = "{";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + std::to_string(values[i]);
  return s + "}";
}

std::string bracketed(std::vector<Index> const& values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + std::to_string(values[i]);
  return s + "]";
}

}  // namespace symrep
