#include "unitlab/datasets.hpp"

#include <stdexcept>

#include "unitlab/group_ring.hpp"

namespace unitlab {

std::string_view embedded_file(std::string_view name) {
  for (const auto& f : embedded_files()) {
    if (f.name == name) return f.text;
  }
  throw std::out_of_range("no embedded file named " + std::string(name));
}

const std::vector<Dataset>& bundled_datasets() {
  static const std::vector<Dataset> sets = [] {
    std::vector<Dataset> out;
    for (int i = 1; i <= 18; ++i) {
      const std::string n = (i < 10 ? "0" : "") + std::to_string(i);
      out.push_back({"r4-pair-" + n, "P", DatasetKind::UnitPair, "p_r4_pair" + n + ".txt",
                     "radius-4 unit U" + std::to_string(i) + " and inverse V" + std::to_string(i)});
    }
    for (int i = 1; i <= 4; ++i) {
      const std::string n = std::to_string(i);
      out.push_back({"r5-swap-w" + n, "P", DatasetKind::SwapUnit, "p_r5_swap_w" + n + ".txt",
                     "radius-5 swap unit W" + n});
    }
    for (int i = 1; i <= 2; ++i) {
      const std::string n = std::to_string(i);
      out.push_back({"r6-swap-s" + n, "P", DatasetKind::SwapUnit, "p_r6_swap_s" + n + ".txt",
                     "radius-6 swap unit S" + n + " (support 81)"});
    }
    out.push_back({"ex1-gap", "P", DatasetKind::UnitPair, "p_ex1_gap_pair.txt", "radius-6 unit, GAP listing"});
    out.push_back({"ex1-decomposition", "P", DatasetKind::UnitPair, "p_ex1_decomposition_pair.txt",
                   "radius-6 unit, translation decomposition form"});
    out.push_back({"ex2-decomposition", "P", DatasetKind::UnitPair, "p_ex2_decomposition_pair.txt",
                   "second unit, decomposition form with 'z, xz' read as 'z + xz'", true});
    out.push_back({"h4-upp", "H4", DatasetKind::UppWitness, "h4_upp_witness.txt",
                   "sets A, B in H4 with no unique product"});
    return out;
  }();
  return sets;
}

std::vector<PRing> load_p_units(const std::string& file) {
  const PGroup p;
  const UnitFile f = parse_unit_file(embedded_file(file), p.alphabet());
  if (f.group != "P") throw std::runtime_error(file + ": expected group P");
  std::vector<PRing> out;
  for (const auto& block : f.blocks) out.push_back(ring_from_words(p, block));
  return out;
}

std::vector<std::pair<PRing, PRing>> radius4_pairs() {
  std::vector<std::pair<PRing, PRing>> out;
  for (const auto& d : bundled_datasets()) {
    if (d.id.rfind("r4-pair-", 0) != 0) continue;
    const auto units = load_p_units(d.file);
    if (units.size() != 2) throw std::runtime_error(d.file + ": expected a pair");
    out.emplace_back(units[0], units[1]);
  }
  return out;
}

namespace {

std::vector<PRing> singles(std::string_view prefix) {
  std::vector<PRing> out;
  for (const auto& d : bundled_datasets()) {
    if (d.id.rfind(prefix, 0) != 0) continue;
    const auto units = load_p_units(d.file);
    if (units.size() != 1) throw std::runtime_error(d.file + ": expected one unit");
    out.push_back(units[0]);
  }
  return out;
}

}  // namespace

std::vector<PRing> radius5_swap_units() { return singles("r5-swap-"); }
std::vector<PRing> radius6_swap_units() { return singles("r6-swap-"); }

std::pair<std::vector<H4Element>, std::vector<H4Element>> h4_upp_witness() {
  const H4FibGroup g;
  const UnitFile f = parse_unit_file(embedded_file("h4_upp_witness.txt"), g.alphabet());
  if (f.group != "H4" || f.blocks.size() != 2) throw std::runtime_error("h4_upp_witness.txt: expected two H4 sets");
  std::pair<std::vector<H4Element>, std::vector<H4Element>> out;
  for (const auto& w : f.blocks[0]) out.first.push_back(evaluate(g, w));
  for (const auto& w : f.blocks[1]) out.second.push_back(evaluate(g, w));
  return out;
}

std::vector<BundleCheck> verify_bundle() {
  std::vector<BundleCheck> out;
  const PGroup p;
  for (const auto& d : bundled_datasets()) {
    BundleCheck c{d.id, false, d.finding, {}};
    try {
      switch (d.kind) {
        case DatasetKind::UnitPair: {
          const auto units = load_p_units(d.file);
          if (units.size() != 2) throw std::runtime_error("expected a pair");
          const UnitVerdict v = verify_unit_pair(p, units[0], units[1], true);
          c.pass = v == UnitVerdict::NontrivialUnit;
          c.detail = to_string(v) + ", |U|=" + std::to_string(units[0].size()) +
                     ", |V|=" + std::to_string(units[1].size());
          break;
        }
        case DatasetKind::SwapUnit: {
          const auto units = load_p_units(d.file);
          if (units.size() != 1) throw std::runtime_error("expected one unit");
          c.pass = is_swap_unit(units[0]);
          c.detail = std::string(c.pass ? "swap unit" : "not a swap unit") + ", |U|=" + std::to_string(units[0].size());
          break;
        }
        case DatasetKind::UppWitness: {
          const auto [a, b] = h4_upp_witness();
          c.pass = upp_witness_check(H4Group{}, a, b);
          c.detail = std::string(c.pass ? "every product occurs at least twice" : "some product is unique") +
                     ", |A|=" + std::to_string(a.size()) + ", |B|=" + std::to_string(b.size());
          break;
        }
      }
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace unitlab
