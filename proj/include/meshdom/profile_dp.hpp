#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "meshdom/grid.hpp"

namespace meshdom {

// Cell status inside one column of the sweep. `pending` cells are not in the
// set and not yet dominated; they must be resolved by the same-row cell of
// the next column.
enum class CellState : std::uint8_t { chosen = 0, covered = 1, pending = 2, absent = 3 };

inline constexpr int kMaxDpRows = 8;

// States of one column, encodable as a base-4 integer with row 1 as the
// least significant digit. Bijective with codes in [0, 4^rows).
struct ColumnProfile {
  int rows = 0;
  std::vector<CellState> states;

  std::uint32_t encode() const;
  static ColumnProfile decode(std::uint32_t code, int rows);
};

using BigCount = boost::multiprecision::cpp_int;

// Counts of minimum dominating sets keyed by how many members sit in the
// first and last columns.
struct BoundaryCensus {
  int gamma = 0;
  BigCount total = 0;
  std::map<std::pair<int, int>, BigCount> counts;
};

// Exact domination number of the (possibly mutilated) mesh by a
// column-by-column sweep over cell-state profiles. Requires m <= 8.
int gamma_grid(const GridSpec& spec);

// One minimum dominating set, deterministic: the traceback follows the
// lexicographically least sequence of encoded column profiles.
DominatingSet extract_min_set(const GridSpec& spec);

// Counting version of the sweep; requires intact first and last columns
// (no deletions touching them). Counts are exact big integers.
BoundaryCensus boundary_census(const GridSpec& spec);

namespace dp_detail {

// Per-column presence masks, 1-based columns; bit j-1 stands for row j.
// hmask[c] covers the edges entering column c from column c-1 (hmask[1]=0).
struct ColumnMasks {
  int n = 0;
  int m = 0;
  std::vector<std::uint16_t> live;
  std::vector<std::uint16_t> vmask;
  std::vector<std::uint16_t> hmask;
};

ColumnMasks masks_of(const GridSpec& spec);

// Fast path for repeated evaluation with patched edge masks (bondage scans).
int gamma_from_masks(const ColumnMasks& masks);

void remove_edge(ColumnMasks& masks, const EdgeId& e);

}  // namespace dp_detail

}  // namespace meshdom
