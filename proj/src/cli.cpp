#include "symrep/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "symrep/dot.hpp"
#include "symrep/oracle.hpp"
#include "symrep/orbit_category.hpp"
#include "symrep/workspace.hpp"

namespace symrep {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::string format = "text";
  std::string dot;
  std::size_t max_monoid = 0;
  std::size_t max_enum = 0;

  std::string input;
  std::string second;
  std::string submonoid;
  std::string elements;
  std::string family;
  std::string side = "right";
  std::size_t max_order = 2;
  std::size_t max_points = 2;
};

struct Outcome {
  Document payload;
  std::vector<std::vector<std::string>> diagnostics;
  int exit = kExitOk;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<Index> parse_list(std::string const& text, std::string_view flag) {
  std::vector<Index> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Index v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw Error(ErrorCode::Usage, std::string(flag) + ": expected comma-separated indices, got '" +
                                        text + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<std::string> echo(std::vector<std::string> const& args) {
  std::vector<std::string> out;
  for (auto const& a : args) {
    auto eq = a.find('=');
    if (a.rfind("--", 0) == 0 && eq != std::string::npos) {
      std::string value = a.substr(eq + 1);
      out.push_back(a.substr(0, eq + 1) +
                    (value.find('/') != std::string::npos ? fs::path(value).filename().string() : value));
    } else {
      out.push_back(a.find('/') != std::string::npos ? fs::path(a).filename().string() : a);
    }
  }
  return out;
}

void write_dot(std::string const& path, std::string const& text, Outcome& o) {
  if (path.empty()) return;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Usage, "cannot write '" + path + "'");
  f << text;
  o.payload.add("dot", fs::path(path).filename().string());
}

void add_mset(Document& doc, FinMSet const& a) {
  doc.add("size", std::to_string(a.size()));
  doc.add_block("action", to_token_rows(a.action()));
}

// ---------------------------------------------------------------------------

Outcome cmd_completion(Workspace& ws, Options const& opt) {
  FiniteMonoid const& m = ws.monoid(opt.input);
  GroupCompletion gc = group_completion(m);
  Outcome o;
  o.payload.add("monoid-order", std::to_string(m.size()));
  o.payload.add("idempotents", to_tokens(idempotents(m)));
  o.payload.add("group-order", std::to_string(gc.group.size()));
  o.payload.add("identity", std::to_string(gc.group.identity()));
  o.payload.add_block("table", to_token_rows(gc.group.table()));
  o.payload.add("q", to_tokens(gc.q.mapping));
  o.payload.add_block("kernel", to_token_rows(gc.kernel.classes()));
  return o;
}

// A over its own monoid, or its restriction to --submonoid.
std::pair<FinMSet, std::optional<Submonoid>> acting_set(Workspace& ws, Options const& opt) {
  LoadedMSet const& loaded = ws.mset(opt.input);
  if (opt.submonoid.empty()) return {loaded.mset, std::nullopt};
  if (loaded.over)
    throw Error(ErrorCode::Usage, "--submonoid needs an M-set over the full monoid");
  Submonoid n = make_submonoid(loaded.ambient, parse_list(opt.submonoid, "--submonoid"));
  return {loaded.mset, std::move(n)};
}

Outcome cmd_rinv(Workspace& ws, Options const& opt) {
  auto [a, n] = acting_set(ws, opt);
  RinvResult r = n ? rinv_rel(*n, a) : rinv(group_completion(a.monoid()), a);
  Outcome o;
  if (n) o.payload.add("submonoid", braced(n->elements));
  o.payload.add("group-order", std::to_string(r.completion.group.size()));
  add_mset(o.payload, r.gset);
  o.payload.add("counit", to_tokens(r.counit.mapping));
  bool iso = is_bijective(r.counit.mapping, r.counit.target.size());
  o.payload.add("counit-kind", iso ? "isomorphism" : "injection");
  o.payload.add("symmetric", yes_no(is_symmetric(r.counit.target)));
  return o;
}

Outcome cmd_linv(Workspace& ws, Options const& opt) {
  auto [a, n] = acting_set(ws, opt);
  LinvResult l = n ? linv_rel(*n, a) : linv(group_completion(a.monoid()), a);
  Outcome o;
  if (n) o.payload.add("submonoid", braced(n->elements));
  o.payload.add("group-order", std::to_string(l.completion.group.size()));
  add_mset(o.payload, l.gset);
  o.payload.add("unit", to_tokens(l.unit.mapping));
  bool iso = is_bijective(l.unit.mapping, l.gset.size());
  std::vector<bool> hit(l.gset.size(), false);
  for (Index v : l.unit.mapping) hit[v] = true;
  bool onto = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  o.payload.add("unit-kind", iso ? "isomorphism" : onto ? "surjection" : "map");
  o.payload.add("symmetric", yes_no(is_symmetric(l.unit.source)));
  return o;
}

Outcome cmd_restrict(Workspace& ws, Options const& opt) {
  if (opt.submonoid.empty()) throw Error(ErrorCode::Usage, "restrict requires --submonoid");
  auto [a, n] = acting_set(ws, opt);
  Outcome o;
  o.payload.add("submonoid", braced(n->elements));
  add_mset(o.payload, restrict(a, *n));
  return o;
}

Submonoid const& declared_submonoid(LoadedMSet const& loaded, std::string_view command) {
  if (!loaded.over)
    throw Error(ErrorCode::Usage,
                std::string(command) + " needs an M-set file declaring 'submonoid:'");
  return *loaded.over;
}

Outcome cmd_induce(Workspace& ws, Options const& opt) {
  LoadedMSet const& loaded = ws.mset(opt.input);
  Submonoid const& n = declared_submonoid(loaded, "induce");
  Induced ind = induce(n, loaded.mset);
  Outcome o;
  o.payload.add("submonoid", braced(n.elements));
  add_mset(o.payload, ind.mset);
  o.payload.add("unit", to_tokens(ind.unit.mapping));
  return o;
}

Outcome cmd_coinduce(Workspace& ws, Options const& opt) {
  LoadedMSet const& loaded = ws.mset(opt.input);
  Submonoid const& n = declared_submonoid(loaded, "coinduce");
  Coinduced co = coinduce(n, loaded.mset, ws.bounds());
  Outcome o;
  o.payload.add("submonoid", braced(n.elements));
  add_mset(o.payload, co.mset);
  o.payload.add_block("functions", to_token_rows(co.functions));
  return o;
}

Outcome cmd_fixed(Workspace& ws, Options const& opt) {
  LoadedMSet const& loaded = ws.mset(opt.input);
  FinMSet const& a = loaded.mset;
  std::vector<Index> elements = parse_list(opt.elements, "--elements");
  if (opt.elements.empty())
    for (Index m = 0; m < a.monoid().size(); ++m) elements.push_back(m);
  for (Index m : elements)
    if (m >= a.monoid().size())
      throw Error(ErrorCode::IndexOutOfRange, "--elements: " + std::to_string(m) + " is not an element", {m});
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Outcome o;
  o.payload.add("elements", braced(elements));
  o.payload.add("fixed", to_tokens(fixed_points(a, elements)));
  o.payload.add_block("orbits", to_token_rows(orbits(a)));
  return o;
}

Outcome cmd_equiv(Workspace& ws, Options const& opt) {
  Side side;
  if (opt.side == "right") side = Side::Right;
  else if (opt.side == "left") side = Side::Left;
  else throw Error(ErrorCode::Usage, "--side must be 'right' or 'left'");
  EqMap const& f = ws.map(opt.input);
  FamilyZY const& family = ws.family(opt.second);
  if (!(family.monoid == f.source.monoid()))
    throw Error(ErrorCode::MonoidMismatch, "map and family are over different monoids");
  Verdict v = equivalence(f, family, side);
  Outcome o;
  o.payload.add("side", opt.side);
  std::vector<std::vector<std::string>> rows;
  for (auto const& e : v.entries)
    rows.push_back({braced(e.submonoid), braced(e.subgroup), braced(e.source_fixed),
                    braced(e.target_fixed), bracketed(e.induced), yes_no(e.bijective)});
  o.payload.add_block("verdicts", rows);
  o.payload.add("equivalence", yes_no(v.equivalence));
  o.exit = v.equivalence ? kExitOk : kExitNegative;
  return o;
}

std::shared_ptr<OrbitCategory const> orbit_category(Workspace& ws, FiniteMonoid const& m,
                                                    Options const& opt, Outcome& o) {
  if (opt.family.empty()) {
    o.payload.add("scope", "all");
    return std::make_shared<OrbitCategory const>(build_orbit_category(m, ws.bounds()));
  }
  FamilyZY const& family = ws.family(opt.family);
  if (!(family.monoid == m))
    throw Error(ErrorCode::MonoidMismatch, "family is over a different monoid");
  o.payload.add("scope", "family");
  return std::make_shared<OrbitCategory const>(build_orbit_category(family, ws.bounds()));
}

Outcome cmd_orbit_cat(Workspace& ws, Options const& opt) {
  FiniteMonoid const& m = ws.monoid(opt.input);
  Outcome o;
  auto cat = orbit_category(ws, m, opt, o);
  std::vector<std::vector<std::string>> objects;
  for (Index i = 0; i < cat->size(); ++i)
    objects.push_back({std::to_string(i), cat->object(i).label(),
                       std::to_string(cat->object(i).realization.size())});
  o.payload.add_block("objects", objects);
  std::vector<std::vector<Index>> homs(cat->size(), std::vector<Index>(cat->size()));
  bool cross = true;
  for (Index i = 0; i < cat->size(); ++i)
    for (Index j = 0; j < cat->size(); ++j) {
      homs[i][j] = cat->hom(i, j).size();
      HomComparison c = hom_via_rinv(*cat, i, j, ws.bounds());
      cross = cross && c.bijective && c.homs.size() == homs[i][j];
    }
  o.payload.add_block("homs", to_token_rows(homs));
  bool laws = check_category_laws(*cat);
  o.payload.add("laws", laws ? "ok" : "failed");
  o.payload.add("cross-check", cross ? "ok" : "failed");
  write_dot(opt.dot, orbit_category_dot(*cat), o);
  if (!laws || !cross) o.exit = kExitNegative;
  return o;
}

Outcome cmd_xfunctor(Workspace& ws, Options const& opt) {
  LoadedMSet const& loaded = ws.mset(opt.input);
  if (loaded.over) throw Error(ErrorCode::Usage, "xfunctor needs an M-set over the full monoid");
  Outcome o;
  auto cat = orbit_category(ws, loaded.ambient, opt, o);
  OrbitDiagram d = x_functor(cat, loaded.mset, ws.bounds());
  std::vector<std::vector<std::string>> values;
  for (Index i = 0; i < cat->size(); ++i)
    values.push_back({cat->object(i).label(), braced(d.values[i])});
  o.payload.add_block("values", values);
  bool functorial = check_functoriality(d);
  o.payload.add("functorial", yes_no(functorial));
  bool round_trip = false;
  if (cat->find({loaded.ambient.identity()}, {0})) {
    round_trip = isomorphic(upsilon(d), loaded.mset, ws.bounds());
    o.payload.add("upsilon", round_trip ? "isomorphic" : "not-isomorphic");
  } else {
    o.payload.add("upsilon", "unavailable");
    o.diagnostics.push_back({"note", "(e,e)", "is", "not", "an", "object"});
    round_trip = true;
  }
  if (!functorial || !round_trip) o.exit = kExitNegative;
  return o;
}

Outcome cmd_dynamics(Workspace& ws, Options const& opt) {
  FunctionalGraph const& fg = ws.graph(opt.input);
  EventualImage ei = eventual_image(fg);
  LimitCycles lc = limit_cycles(fg);
  ZSet r = rinv_nat(fg);
  LinvNat l = linv_nat(fg);
  Outcome o;
  o.payload.add("states", std::to_string(fg.size()));
  o.payload.add("eventual-image", to_tokens(ei.states));
  o.payload.add_block("cycles", to_token_rows(lc.cycles));
  o.payload.add("transient", to_tokens(lc.transient));
  o.payload.add("cycle-type", to_tokens(r.cycle_type()));
  ZSet image = make_zset(ei.states, ei.restriction);
  bool agree = zset_isomorphism(r, l.zset).has_value() && zset_isomorphism(r, image).has_value();
  o.payload.add("rinv-linv", agree ? "isomorphic" : "different");
  try {
    TransitionMonoid tm = transition_monoid(fg, ws.bounds());
    o.payload.add("transition-order", std::to_string(tm.monoid.size()));
  } catch (Error const& e) {
    if (e.code() != ErrorCode::SizeBoundExceeded) throw;
    o.payload.add("transition-order", "exceeds-bound");
  }
  write_dot(opt.dot, dynamics_dot(fg), o);
  if (!agree) o.exit = kExitNegative;
  return o;
}

Outcome cmd_oracle(Workspace& ws, Options const& opt) {
  Outcome o;
  o.payload.add("max-order", std::to_string(opt.max_order));
  o.payload.add("max-points", std::to_string(opt.max_points));
  std::vector<std::vector<std::string>> rows;
  bool ok = true;
  for (auto const& c : run_oracles(opt.max_order, opt.max_points, ws.bounds())) {
    rows.push_back({c.name, std::to_string(c.cases), std::to_string(c.failures)});
    ok = ok && c.failures == 0;
  }
  o.payload.add_block("checks", rows);
  o.payload.add("status", ok ? "pass" : "fail");
  o.exit = ok ? kExitOk : kExitNegative;
  return o;
}

std::vector<std::string> reversed(std::vector<std::string> args) {
  std::reverse(args.begin(), args.end());
  return args;
}

}  // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Symmetric replacements of finite monoid actions", "symrep"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "tree"}));
  app.add_option("--max-monoid", opt.max_monoid,
                 "Largest monoid order for exhaustive enumeration (orbit category, monoid enumeration)");
  app.add_option("--max-enum", opt.max_enum, "Search-space budget for map enumeration");

  using Handler = Outcome (*)(Workspace&, Options const&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto sub = [&](char const* name, char const* help, Handler h) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    commands.emplace_back(s, h);
    return s;
  };
  auto with_input = [&](CLI::App* s, char const* what) {
    s->add_option("input", opt.input, what)->required();
    return s;
  };

  with_input(sub("completion", "Group completion of a monoid", cmd_completion), "monoid file");
  for (auto [name, help, h] : {std::tuple{"rinv", "Right symmetric replacement", cmd_rinv},
                               std::tuple{"linv", "Left symmetric replacement", cmd_linv},
                               std::tuple{"restrict", "Restriction to a submonoid", cmd_restrict}}) {
    auto* s = with_input(sub(name, help, h), "M-set file");
    s->add_option("--submonoid", opt.submonoid, "Submonoid elements, e.g. 0,2");
  }
  with_input(sub("induce", "Induction from a submonoid", cmd_induce), "N-set file");
  with_input(sub("coinduce", "Coinduction from a submonoid", cmd_coinduce), "N-set file");
  with_input(sub("fixed", "Fixed points and orbits", cmd_fixed), "M-set file")
      ->add_option("--elements", opt.elements, "Monoid elements, e.g. 1,2 (default: all)");
  {
    auto* s = with_input(sub("equiv", "(Z,Y)-equivalence verdict", cmd_equiv), "map file");
    s->add_option("family", opt.second, "family file")->required();
    s->add_option("--side", opt.side, "right or left");
  }
  {
    auto* s = with_input(sub("orbit-cat", "Relative orbit category", cmd_orbit_cat), "monoid file");
    s->add_option("--family", opt.family, "Restrict objects to a family file");
    s->add_option("--dot", opt.dot, "Write a DOT rendering");
  }
  with_input(sub("xfunctor", "Fixed-point diagram of an M-set", cmd_xfunctor), "M-set file")
      ->add_option("--family", opt.family, "Restrict objects to a family file");
  with_input(sub("dynamics", "Limit cycles of a functional graph", cmd_dynamics), "graph file")
      ->add_option("--dot", opt.dot, "Write a DOT rendering");
  {
    auto* s = sub("oracle", "Run the brute-force oracle suites", cmd_oracle);
    s->add_option("--max-order", opt.max_order, "Largest monoid order");
    s->add_option("--max-points", opt.max_points, "Largest M-set size");
  }

  // The first positional token names the command; global options take one value.
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string const& a = args[i];
    if (a == "--format" || a == "--max-monoid" || a == "--max-enum") {
      ++i;
      continue;
    }
    if (a.empty() || a[0] == '-') continue;
    if (std::none_of(commands.begin(), commands.end(), [&](auto const& c) { return c.first->get_name() == a; })) {
      err << "error: Usage: unknown command '" << a << "'\n";
      return kExitError;
    }
    break;
  }

  try {
    app.parse(reversed(args));
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kExitOk;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (CLI::ParseError const& e) {
    err << "error: Usage: " << e.what() << "\n";
    return kExitError;
  }

  Bounds bounds;
  if (opt.max_monoid) {
    bounds.max_orbit_all_order = opt.max_monoid;
    bounds.max_enum_order = opt.max_monoid;
  }
  if (opt.max_enum) bounds.max_enum = opt.max_enum;

  try {
    Workspace ws(bounds);
    for (auto const& [s, handler] : commands) {
      if (!s->parsed()) continue;
      Outcome o = handler(ws, opt);
      Report r{echo(args), std::move(o.payload), std::move(o.diagnostics)};
      out << (opt.format == "tree" ? r.to_tree() : r.to_text());
      return o.exit;
    }
    return kExitError;
  } catch (Error const& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace symrep
