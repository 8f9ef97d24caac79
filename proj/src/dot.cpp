#include "symrep/dot.hpp"

#include <array>
#include <sstream>

namespace symrep {

std::string orbit_category_dot(OrbitCategory const& category) {
  std::ostringstream os;
  os << "digraph orbit_category {\n";
  os << "  node [shape=box];\n";
  for (Index i = 0; i < category.size(); ++i)
    os << "  o" << i << " [label=\"" << category.object(i).label() << "\"];\n";
  for (Index i = 0; i < category.size(); ++i)
    for (Index j = 0; j < category.size(); ++j) {
      std::size_t n = category.hom(i, j).size();
      if (n > 0) os << "  o" << i << " -> o" << j << " [label=\"" << n << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

std::string dynamics_dot(FunctionalGraph const& fg) {
  static constexpr std::array<char const*, 8> palette = {
      "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666"};
  LimitCycles lc = limit_cycles(fg);
  std::vector<std::size_t> cycle_of(fg.size(), static_cast<std::size_t>(-1));
  for (std::size_t c = 0; c < lc.cycles.size(); ++c)
    for (Index s : lc.cycles[c]) cycle_of[s] = c;
  std::ostringstream os;
  os << "digraph dynamics {\n";
  os << "  node [shape=circle];\n";
  for (Index s = 0; s < fg.size(); ++s) {
    os << "  s" << s << " [label=\"" << s << "\"";
    if (cycle_of[s] != static_cast<std::size_t>(-1))
      os << ", peripheries=2, style=filled, fillcolor=\"" << palette[cycle_of[s] % palette.size()] << "\"";
    os << "];\n";
  }
  for (Index s = 0; s < fg.size(); ++s) os << "  s" << s << " -> s" << fg.step[s] << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace symrep
