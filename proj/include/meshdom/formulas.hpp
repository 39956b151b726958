#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "meshdom/grid.hpp"

namespace meshdom {

// The n values whose 4-row mesh needs one extra dominator (gamma = n + 1).
inline constexpr std::array<int, 6> kGamma4Exceptions = {1, 2, 3, 5, 6, 9};

bool gamma4_exception(int n);

// Closed-form gamma of the intact n x m mesh for m in {2, 3, 4}.
// nullopt means outside the table's coverage, not an error.
std::optional<int> gamma_formula(int n, int m);

// Closed-form gamma of the cycle-times-triangle product C_n x C_3, n >= 3.
int torus3_gamma_formula(int n);

// Closed-form bondage number of the intact n x m mesh for m in {2, 3, 4}.
// Coverage: m=2 needs n>=2, m=3 needs n>=3, m=4 needs n>=4 with n outside
// the exceptional list except 5, 6, 9.
std::optional<int> bondage_formula(int n, int m);

// Explicit dominating-set patterns with per-pattern applicability.
enum class Construction {
  mid_row3,        // 3-row mesh, any n: middle-row anchors plus flanking pairs
  two_row_repair,  // 2-row mesh minus one edge, even n >= 4
  alt0_a,          // 3-row mesh, n % 4 == 0: alternative minimum patterns
  alt0_b,
  alt0_c,
  alt3_a,          // 3-row mesh, n % 4 == 3: alternative minimum patterns
  alt3_b,
};

inline constexpr std::array<Construction, 7> kAllConstructions = {
    Construction::mid_row3, Construction::two_row_repair, Construction::alt0_a,
    Construction::alt0_b,   Construction::alt0_c,         Construction::alt3_a,
    Construction::alt3_b,
};

const char* to_string(Construction c);
std::optional<Construction> parse_construction(std::string_view name);

// The instance a construction's output is meant to dominate.
GridSpec construction_host(Construction id, int n,
                           std::optional<EdgeId> removed_edge = {});

DominatingSet construct(Construction id, int n,
                        std::optional<EdgeId> removed_edge = {});

}  // namespace meshdom
