#pragma once

#include <string>
#include <utility>
#include <vector>

#include "unitlab/embedded_data.hpp"
#include "unitlab/h4_group.hpp"
#include "unitlab/symmetry.hpp"
#include "unitlab/unit_file.hpp"

namespace unitlab {

enum class DatasetKind { UnitPair, SwapUnit, UppWitness };

struct Dataset {
  std::string id;
  std::string group;  // "P" or "H4"
  DatasetKind kind;
  std::string file;  // embedded file name
  std::string note;
  // Data finding: the datum is expected to be checked but not assumed to pass.
  bool finding = false;
};

const std::vector<Dataset>& bundled_datasets();

// Parses an embedded P file (pair or single-unit) into ring elements.
std::vector<PRing> load_p_units(const std::string& file);
// The 18 bundled radius-4 pairs, U_i then V_i.
std::vector<std::pair<PRing, PRing>> radius4_pairs();
// W1..W4 and S1, S2.
std::vector<PRing> radius5_swap_units();
std::vector<PRing> radius6_swap_units();
// A and B from the bundled H4 witness (x-generator words).
std::pair<std::vector<H4Element>, std::vector<H4Element>> h4_upp_witness();

struct BundleCheck {
  std::string id;
  bool pass = false;
  bool finding = false;
  std::string detail;
};

std::vector<BundleCheck> verify_bundle();

}  // namespace unitlab
