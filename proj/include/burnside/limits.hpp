#pragma once

#include <cstdint>

namespace burnside {

/// Global size bounds. Mutated once at startup (CLI flags), read everywhere.
struct Limits {
  long group_order = 20000;       // hard cap on enumerated group order
  long lattice_order = 400;       // cap on groups whose subgroup lattice we compute
  long symmetric_degree = 7;      // cap on S<m> construction
  long degree = 64;               // cap on permutation degree
  long long set_size = 1000000;   // cap on G-set carriers
  long long table_entries = 100000000;  // cap on |G| * |X| action-table cells
};

Limits& limits();

}  // namespace burnside
