#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "valgroup/context.hpp"

namespace valgroup {

/// Parsed group-specification file. Contexts keep their declaration order;
/// the first valuated declaration is the default CLI target.
struct SpecFile {
  std::map<std::string, FiniteGroupPtr> groups;
  std::map<std::string, Subgroup> subgroups;
  std::map<std::string, Isomorphism> isos;
  std::vector<std::pair<std::string, ContextPtr>> contexts;

  const ContextPtr& context(const std::string& name) const;
  const ContextPtr& primary() const;
};

/// Grammar (one declaration per line, '#' starts a comment):
///   group <name> = cyclic(<n>) | table([[...],[...]])
///   subgroup <name> = <group>.generated(<i>,<j>,...)
///   iso <name> = <sub> -> <sub> { <i> -> <j>, ... }
///   valuated <name> = free(<rank>) | free_product(<G>,<G>)
///                   | amalgam(<G>,<G>; <sub>~<sub> via <iso>)
///                   | hnn(<G>; <sub>~<sub> via <iso>)
/// Errors carry the line and column of the first problem.
SpecFile parse_spec(const std::string& text);

/// Space-separated atoms; "1" is the identity. Free: letters a.. with optional
/// ^k. Free product / amalgam: x / y for the two factors, with an optional
/// element index (x2) or power (x^2). HNN: u<k> base elements and t^k.
GroupElement parse_word(const GroupContext& ctx, const std::string& text);

/// Canonical text form; parse_word(render_word(g)) == g.
std::string render_word(const GroupElement& g);

}  // namespace valgroup
