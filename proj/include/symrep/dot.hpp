#pragma once

#include <string>

#include "symrep/dynamics.hpp"
#include "symrep/orbit_category.hpp"

namespace symrep {

/// Objects as nodes, one edge per non-empty hom-set labelled with its size.
std::string orbit_category_dot(OrbitCategory const& category);

/// States as nodes and step as edges. Eventual-image states are drawn with a
/// double border and filled with a per-cycle colour.
std::string dynamics_dot(FunctionalGraph const& fg);

}  // namespace symrep
