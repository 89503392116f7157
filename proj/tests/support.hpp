#pragma once

// Shared helpers for the test binaries.

#include <map>
#include <memory>
#include <string>

#include "nilpot/errors.hpp"
#include "nilpot/radical.hpp"

#ifndef NILPOT_DATA_DIR
#error "NILPOT_DATA_DIR must point at the fixture directory"
#endif

namespace nilpot::testing {

inline std::string fixture_path(const std::string& name) { return std::string(NILPOT_DATA_DIR) + "/" + name + ".quiver"; }

inline AlgebraPresentation fixture(const std::string& name) { return load_presentation(fixture_path(name)); }

/// Analyses are expensive enough to share between test cases.
inline const Analysis& analysis(const std::string& name) {
  static std::map<std::string, std::unique_ptr<Analysis>> cache;
  auto& slot = cache[name];
  if (!slot) slot = std::make_unique<Analysis>(fixture(name));
  return *slot;
}

inline VertexId vertex(const AlgebraPresentation& p, const std::string& name) { return *p.quiver.find_vertex(name); }
inline VertexId vertex(const Analysis& an, const std::string& name) { return vertex(an.presentation(), name); }

inline std::size_t r_of(const Analysis& an, const std::string& name) { return an.r(vertex(an, name)); }

/// Every fixture that is representation-finite.
inline const char* const kFiniteFixtures[] = {"point",           "a2",
                                             "a3",              "a3_zero",
                                             "commuting_square", "cyclic3",
                                             "cycle4",          "ten_vertex",
                                             "toupie_one_zero", "toupie_two_zero",
                                             "toupie_commuting_zero"};

}  // namespace nilpot::testing
