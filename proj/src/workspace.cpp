#include "symrep/workspace.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace symrep {
namespace {

namespace fs = std::filesystem;

std::vector<std::string> optional_names(Document const& doc, std::size_t expected) {
  Field const* f = doc.find("names");
  if (!f) return {};
  if (!f->inline_row || f->rows.front().size() != expected)
    fail_at(*f, "names must list exactly " + std::to_string(expected) + " labels");
  return f->rows.front();
}

void reject_unknown(Document const& doc, std::vector<std::string_view> const& known) {
  for (auto const& f : doc.fields()) {
    bool ok = false;
    for (auto k : known) ok = ok || f.key == k;
    if (!ok) fail_at(f, "unexpected field '" + f.key + "'");
  }
}

fs::path resolve(fs::path const& base, Field const& field) {
  fs::path p = single_token(field);
  return p.is_absolute() ? p : base.parent_path() / p;
}

std::string key_of(fs::path const& path) { return fs::weakly_canonical(path).string(); }

// Prefixes any failure while reading `path` with its file name.
template <class F>
auto in_file(fs::path const& path, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (Error const& e) {
    throw Error(e.code(), path.filename().string() + ": " + e.message(), e.witness());
  }
}

}  // namespace

FiniteMonoid monoid_from_document(Document const& doc) {
  reject_unknown(doc, {"kind", "size", "identity", "names", "table"});
  Field const& size_field = doc.require("size");
  std::size_t size = parse_single_index(size_field);
  Index identity = parse_single_index(doc.require("identity"));
  Field const& table_field = doc.require("table");
  auto table = parse_index_matrix(table_field);
  if (table.size() != size) fail_at(table_field, "table must have " + std::to_string(size) + " rows");
  for (std::size_t r = 0; r < table.size(); ++r)
    if (table[r].size() != size)
      fail_at(table_field, r, 0, "table row must have " + std::to_string(size) + " entries");
  return FiniteMonoid::from_table(table, identity, optional_names(doc, size));
}

Document monoid_to_document(FiniteMonoid const& monoid) {
  Document doc;
  doc.add("kind", "monoid");
  doc.add("size", std::to_string(monoid.size()));
  doc.add("identity", std::to_string(monoid.identity()));
  if (!monoid.names().empty()) doc.add("names", monoid.names());
  doc.add_block("table", to_token_rows(monoid.table()));
  return doc;
}

FunctionalGraph graph_from_document(Document const& doc) {
  reject_unknown(doc, {"kind", "size", "step"});
  std::size_t size = parse_single_index(doc.require("size"));
  Field const& step_field = doc.require("step");
  auto step = parse_index_list(step_field);
  if (step.size() != size) fail_at(step_field, "step must list " + std::to_string(size) + " states");
  for (std::size_t t = 0; t < step.size(); ++t)
    if (step[t] >= size) fail_at(step_field, 0, t, "step value out of range");
  return make_functional_graph(std::move(step));
}

Document graph_to_document(FunctionalGraph const& fg) {
  Document doc;
  doc.add("kind", "graph");
  doc.add("size", std::to_string(fg.size()));
  doc.add("step", to_tokens(fg.step));
  return doc;
}

// ---------------------------------------------------------------------------
// Workspace

Document Workspace::load(fs::path const& path, std::string_view kind) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  Document doc = Document::parse(buffer.str());
  Field const& k = doc.require("kind");
  if (doc.fields().front().key != "kind") fail_at(doc.fields().front(), "first field must be 'kind'");
  if (single_token(k) != kind)
    fail_at(k, 0, 0, "expected kind '" + std::string(kind) + "', got '" + single_token(k) + "'");
  return doc;
}

FiniteMonoid const& Workspace::monoid(fs::path const& path) {
  std::string key = key_of(path);
  if (auto it = monoids_.find(key); it != monoids_.end()) return it->second;
  FiniteMonoid m = in_file(path, [&] { return monoid_from_document(load(path, "monoid")); });
  return monoids_.emplace(key, std::move(m)).first->second;
}

LoadedMSet const& Workspace::mset(fs::path const& path) {
  std::string key = key_of(path);
  if (auto it = msets_.find(key); it != msets_.end()) return it->second;
  LoadedMSet loaded = in_file(path, [&] {
    Document doc = load(path, "mset");
    reject_unknown(doc, {"kind", "monoid", "submonoid", "size", "names", "action"});
    FiniteMonoid ambient = monoid(resolve(path, doc.require("monoid")));
    std::optional<Submonoid> over;
    if (Field const* sub = doc.find("submonoid")) over = make_submonoid(ambient, parse_index_list(*sub));
    FiniteMonoid const& acting = over ? over->embedded : ambient;
    std::size_t size = parse_single_index(doc.require("size"));
    Field const& action_field = doc.require("action");
    auto action = action_field.rows.empty() && size == 0
                      ? std::vector<std::vector<Index>>(acting.size())
                      : parse_index_matrix(action_field);
    if (action.size() != acting.size())
      fail_at(action_field, "action must have one row per monoid element (" +
                                std::to_string(acting.size()) + ")");
    for (std::size_t r = 0; r < action.size(); ++r)
      if (action[r].size() != size)
        fail_at(action_field, r, 0, "action row must have " + std::to_string(size) + " entries");
    FinMSet mset = FinMSet::from_table(acting, action, optional_names(doc, size));
    return LoadedMSet{std::move(mset), std::move(ambient), std::move(over)};
  });
  return msets_.emplace(key, std::move(loaded)).first->second;
}

EqMap const& Workspace::map(fs::path const& path) {
  std::string key = key_of(path);
  if (auto it = maps_.find(key); it != maps_.end()) return it->second;
  EqMap f = in_file(path, [&] {
    Document doc = load(path, "map");
    reject_unknown(doc, {"kind", "source", "target", "mapping"});
    FinMSet source = mset(resolve(path, doc.require("source"))).mset;
    FinMSet target = mset(resolve(path, doc.require("target"))).mset;
    auto mapping = parse_index_list(doc.require("mapping"));
    return make_eqmap(std::move(source), std::move(target), std::move(mapping));
  });
  return maps_.emplace(key, std::move(f)).first->second;
}

FamilyZY const& Workspace::family(fs::path const& path) {
  std::string key = key_of(path);
  if (auto it = families_.find(key); it != families_.end()) return it->second;
  FamilyZY family = in_file(path, [&] {
    Document doc = load(path, "family");
    FiniteMonoid ambient = monoid(resolve(path, doc.require("monoid")));
    std::vector<FamilySpec> specs;
    for (auto const& f : doc.fields()) {
      if (f.key == "kind" || f.key == "monoid") continue;
      if (f.key == "submonoid") {
        specs.push_back(FamilySpec{parse_index_list(f), std::nullopt});
      } else if (f.key == "subgroups") {
        if (specs.empty()) fail_at(f, "'subgroups' must follow a 'submonoid'");
        if (f.inline_row) {
          if (single_token(f) != "full") fail_at(f, 0, 0, "inline subgroups value must be 'full'");
          specs.back().subgroups = std::nullopt;
        } else {
          specs.back().subgroups = parse_index_matrix(f);
        }
      } else {
        fail_at(f, "unexpected field '" + f.key + "'");
      }
    }
    return make_family(ambient, specs, bounds_);
  });
  return families_.emplace(key, std::move(family)).first->second;
}

FunctionalGraph const& Workspace::graph(fs::path const& path) {
  std::string key = key_of(path);
  if (auto it = graphs_.find(key); it != graphs_.end()) return it->second;
  FunctionalGraph g = in_file(path, [&] { return graph_from_document(load(path, "graph")); });
  return graphs_.emplace(key, std::move(g)).first->second;
}

// ---------------------------------------------------------------------------
// Report

Document Report::to_document() const {
  Document doc;
  doc.add("command", command);
  for (auto const& f : payload.fields()) doc.append(f);
  doc.add_block("diagnostics", diagnostics);
  return doc;
}

Report Report::from_document(Document const& doc) {
  auto const& fields = doc.fields();
  if (fields.size() < 2 || fields.front().key != "command" || fields.back().key != "diagnostics")
    throw Error(ErrorCode::ParseError, "report must start with 'command' and end with 'diagnostics'");
  Report r;
  r.command = fields.front().rows.empty() ? std::vector<std::string>{} : fields.front().rows.front();
  for (std::size_t i = 1; i + 1 < fields.size(); ++i) r.payload.append(fields[i]);
  r.diagnostics = fields.back().rows;
  return r;
}

std::string Report::to_tree() const {
  using json = nlohmann::ordered_json;
  auto token_value = [](std::string const& t) -> json {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec == std::errc() && ptr == t.data() + t.size()) return v;
    return t;
  };
  auto row_value = [&](std::vector<std::string> const& row) {
    json arr = json::array();
    for (auto const& t : row) arr.push_back(token_value(t));
    return arr;
  };
  json root = json::object();
  Document doc = to_document();
  for (auto const& f : doc.fields()) {
    json value;
    if (f.inline_row) {
      value = f.rows.front().size() == 1 ? token_value(f.rows.front().front()) : row_value(f.rows.front());
    } else {
      value = json::array();
      for (auto const& row : f.rows) value.push_back(row_value(row));
    }
    // Report keys are unique, so an object loses nothing.
    root[f.key] = value;
  }
  return root.dump(2) + "\n";
}

}  // namespace symrep
