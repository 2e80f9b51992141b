#include "unitlab/unit_file.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace unitlab {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    out.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

std::string_view directive(std::string_view comment) {
  constexpr std::string_view key = "group:";
  comment = trim(comment.substr(1));
  if (comment.substr(0, key.size()) != key) return {};
  return trim(comment.substr(key.size()));
}

}  // namespace

std::string read_group_directive(std::string_view text) {
  for (auto raw : lines_of(text)) {
    const auto line = trim(raw);
    if (!line.empty() && line[0] == '#' && !directive(line).empty()) return std::string(directive(line));
  }
  return {};
}

UnitFile parse_unit_file(std::string_view text, const GeneratorAlphabet& alphabet) {
  UnitFile f;
  std::string pending_label;
  std::vector<GroupWord> block;
  bool open = false;
  std::size_t lineno = 0;
  const auto close = [&] {
    if (!open) return;
    f.blocks.push_back(std::move(block));
    f.labels.push_back(pending_label);
    block.clear();
    pending_label.clear();
    open = false;
  };
  for (auto raw : lines_of(text)) {
    ++lineno;
    const auto line = trim(raw);
    if (line.empty()) {
      close();
      continue;
    }
    if (line[0] == '#') {
      if (!directive(line).empty()) {
        f.group = std::string(directive(line));
      } else if (!open) {
        pending_label = std::string(trim(line.substr(1)));
      }
      continue;
    }
    try {
      block.push_back(parse_word(line, alphabet));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    open = true;
  }
  close();
  return f;
}

std::string write_unit_file(const UnitFile& f, const GeneratorAlphabet& alphabet) {
  std::string out;
  if (!f.group.empty()) out += "# group: " + f.group + "\n";
  for (std::size_t i = 0; i < f.blocks.size(); ++i) {
    if (i > 0) out += "\n";
    if (i < f.labels.size() && !f.labels[i].empty()) out += "# " + f.labels[i] + "\n";
    for (const auto& w : f.blocks[i]) out += to_string(w, alphabet) + "\n";
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace unitlab
