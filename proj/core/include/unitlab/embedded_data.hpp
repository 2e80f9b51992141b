#pragma once

#include <string_view>
#include <vector>

namespace unitlab {

// Unit and witness files compiled into the library from data/.
struct EmbeddedFile {
  std::string_view name;
  std::string_view text;
};

const std::vector<EmbeddedFile>& embedded_files();

// Text of the named file; throws std::out_of_range when absent.
std::string_view embedded_file(std::string_view name);

}  // namespace unitlab
