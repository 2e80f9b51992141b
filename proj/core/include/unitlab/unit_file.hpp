#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "unitlab/word.hpp"

namespace unitlab {

// Text format for ring elements and element sets:
//   # group: P            optional directive
//   # any comment         the last comment before a block labels it
//   a*b^-1                one support element per line
//                         a blank line ends a block
struct UnitFile {
  std::string group;  // empty when no directive
  std::vector<std::string> labels;
  std::vector<std::vector<GroupWord>> blocks;
};

// Reads the `# group:` directive only.
std::string read_group_directive(std::string_view text);

UnitFile parse_unit_file(std::string_view text, const GeneratorAlphabet& alphabet);
std::string write_unit_file(const UnitFile& f, const GeneratorAlphabet& alphabet);

std::string read_text_file(const std::string& path);

}  // namespace unitlab
