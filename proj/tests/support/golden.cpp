#include "golden.hpp"

#include <fstream>
#include <sstream>

#include "symrep/cli.hpp"

namespace golden {

namespace fs = std::filesystem;

namespace {

std::string slurp(fs::path const& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return "<missing>";
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void spit(fs::path const& p, std::string const& text) { std::ofstream(p, std::ios::binary) << text; }

}  // namespace

std::vector<Case> load_cases(fs::path const& manifest) {
  std::ifstream in(manifest);
  std::vector<Case> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    Case c;
    words >> c.name >> c.exit_code;
    for (std::string w; words >> w;) c.args.push_back(w);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Outcome> run_cases(std::vector<Case> const& cases, fs::path const& fixtures,
                               fs::path const& golden_dir, bool update) {
  fs::path scratch = fs::temp_directory_path() / "symrep-golden";
  fs::create_directories(scratch);
  std::vector<Outcome> results;
  for (Case const& c : cases) {
    std::vector<std::string> args;
    std::vector<std::string> written;
    for (auto const& a : c.args) {
      if (a[0] == '@')
        args.push_back((fixtures / a.substr(1)).string());
      else if (a[0] == '%') {
        args.push_back((scratch / a.substr(1)).string());
        written.push_back(a.substr(1));
        fs::remove(scratch / a.substr(1));
      } else
        args.push_back(a);
    }
    std::ostringstream out, err;
    int code = symrep::run_cli(args, out, err);

    std::vector<std::pair<std::string, std::string>> files = {{c.name + ".out", out.str()}};
    if (!err.str().empty()) files.push_back({c.name + ".err", err.str()});
    for (auto const& w : written) files.push_back({w, slurp(scratch / w)});

    Outcome o{c.name};
    if (code != c.exit_code) {
      o.ok = false;
      o.detail = "exit " + std::to_string(code) + ", expected " + std::to_string(c.exit_code);
    }
    if (err.str().empty() && fs::exists(golden_dir / (c.name + ".err")) && !update) {
      o.ok = false;
      o.detail += " missing stderr";
    }
    for (auto const& [file, text] : files) {
      if (update) {
        spit(golden_dir / file, text);
      } else if (slurp(golden_dir / file) != text) {
        o.ok = false;
        o.detail += " " + file + " differs";
      }
    }
    results.push_back(std::move(o));
  }
  return results;
}

}  // namespace golden
