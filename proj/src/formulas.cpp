#include "meshdom/formulas.hpp"

#include <algorithm>

namespace meshdom {

bool gamma4_exception(int n) {
  return std::find(kGamma4Exceptions.begin(), kGamma4Exceptions.end(), n) !=
         kGamma4Exceptions.end();
}

std::optional<int> gamma_formula(int n, int m) {
  if (n < 1) throw SpecError("gamma formula requires n >= 1");
  switch (m) {
    case 2:
      return (n + 2) / 2;               // ceil((n+1)/2)
    case 3:
      return n - (n - 1) / 4;
    case 4:
      return gamma4_exception(n) ? n + 1 : n;
    default:
      return std::nullopt;
  }
}

int torus3_gamma_formula(int n) {
  if (n < 3) throw SpecError("cycle product requires n >= 3");
  return n - n / 4;
}

std::optional<int> bondage_formula(int n, int m) {
  if (n < 1) throw SpecError("bondage formula requires n >= 1");
  switch (m) {
    case 2:
      if (n < 2) return std::nullopt;
      if (n == 2) return 3;
      if (n == 3) return 2;
      return n % 2 == 1 ? 1 : 2;
    case 3:
      if (n < 3) return std::nullopt;
      return (n % 4 == 1 || n % 4 == 2) ? 1 : 2;
    case 4:
      if (n == 5 || n == 9) return 3;
      if (n == 6) return 2;
      if (gamma4_exception(n)) return std::nullopt;  // n in {1,2,3}: no stated value
      return 1;
    default:
      return std::nullopt;
  }
}

const char* to_string(Construction c) {
  switch (c) {
    case Construction::mid_row3: return "mid-row3";
    case Construction::two_row_repair: return "two-row-repair";
    case Construction::alt0_a: return "alt0-a";
    case Construction::alt0_b: return "alt0-b";
    case Construction::alt0_c: return "alt0-c";
    case Construction::alt3_a: return "alt3-a";
    case Construction::alt3_b: return "alt3-b";
  }
  return "?";
}

std::optional<Construction> parse_construction(std::string_view name) {
  for (Construction c : kAllConstructions)
    if (name == to_string(c)) return c;
  return std::nullopt;
}

namespace {

// Middle-row anchors every fourth column, flanked by top/bottom pairs; even
// widths take one extra middle cell in the last column.
std::vector<VertexId> mid_row3_members(int n) {
  std::vector<VertexId> out;
  for (int i = 1; i <= n; i += 4) out.push_back({i, 2});
  for (int i = 3; i <= n; i += 4) {
    out.push_back({i, 1});
    out.push_back({i, 3});
  }
  if (n % 2 == 0) out.push_back({n, 2});
  return out;
}

std::vector<VertexId> residue_column(int n, int residue, int row) {
  std::vector<VertexId> out;
  for (int i = 1; i <= n; ++i)
    if (i % 4 == residue) out.push_back({i, row});
  return out;
}

void append(std::vector<VertexId>& dst, std::vector<VertexId> src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

std::vector<VertexId> two_row_repair_members(int n, EdgeId e) {
  std::vector<VertexId> out;
  if (e.edge_class() == EdgeClass::vertical) {
    int col = e.a.i;
    if (col % 2 == 0) {
      append(out, residue_column(n, 1, 1));
      append(out, residue_column(n, 3, 2));
      out.push_back({n, n % 4 == 0 ? 1 : 2});
    } else {
      append(out, residue_column(n, 2, 1));
      append(out, residue_column(n, 0, 2));
      out.push_back({2, 2});
    }
    return out;
  }
  // Horizontal deletions: the stated patterns take the edge in row 1; a
  // row-2 edge uses the same pattern reflected through the row swap.
  int row = e.a.j;
  int col = e.a.i;  // left endpoint
  auto flip = [&](std::vector<VertexId> v) {
    if (row == 1) return v;
    for (VertexId& x : v) x.j = 3 - x.j;
    return v;
  };
  if (col % 4 == 2 || col % 4 == 3) {
    append(out, residue_column(n, 1, 1));
    append(out, residue_column(n, 3, 2));
    out.push_back({n, 1});
  } else {
    append(out, residue_column(n, 1, 2));
    append(out, residue_column(n, 3, 1));
    out.push_back({n, 1});
  }
  return flip(std::move(out));
}

}  // namespace

GridSpec construction_host(Construction id, int n, std::optional<EdgeId> removed_edge) {
  if (id == Construction::two_row_repair) {
    if (!removed_edge)
      throw std::domain_error("two-row-repair needs the removed edge");
    return GridSpec(n, 2, {*removed_edge});
  }
  return GridSpec(n, 3);
}

DominatingSet construct(Construction id, int n, std::optional<EdgeId> removed_edge) {
  std::vector<VertexId> members;
  switch (id) {
    case Construction::mid_row3:
      if (n < 1) throw std::domain_error("mid-row3 requires n >= 1");
      members = mid_row3_members(n);
      break;
    case Construction::two_row_repair: {
      if (n < 4 || n % 2 != 0)
        throw std::domain_error("two-row-repair requires even n >= 4");
      if (!removed_edge)
        throw std::domain_error("two-row-repair needs the removed edge");
      EdgeId e = *removed_edge;
      if (e.a.i < 1 || e.b.i > n || e.a.j < 1 || e.b.j > 2)
        throw std::domain_error("edge " + to_string(e) + " is not in the 2-row mesh");
      members = two_row_repair_members(n, e);
      break;
    }
    case Construction::alt0_a:
      if (n < 4 || n % 4 != 0) throw std::domain_error("alt0 patterns require n % 4 == 0");
      members = mid_row3_members(n);
      break;
    case Construction::alt0_b:
      if (n < 4 || n % 4 != 0) throw std::domain_error("alt0 patterns require n % 4 == 0");
      append(members, residue_column(n, 0, 2));
      append(members, residue_column(n, 2, 1));
      append(members, residue_column(n, 2, 3));
      members.push_back({1, 2});
      break;
    case Construction::alt0_c:
      if (n < 4 || n % 4 != 0) throw std::domain_error("alt0 patterns require n % 4 == 0");
      append(members, residue_column(n, 1, 1));
      append(members, residue_column(n, 1, 3));
      append(members, residue_column(n, 3, 2));
      members.push_back({n, 2});
      break;
    case Construction::alt3_a:
      if (n < 3 || n % 4 != 3) throw std::domain_error("alt3 patterns require n % 4 == 3");
      members = mid_row3_members(n);
      break;
    case Construction::alt3_b:
      if (n < 3 || n % 4 != 3) throw std::domain_error("alt3 patterns require n % 4 == 3");
      append(members, residue_column(n, 3, 2));
      append(members, residue_column(n, 1, 1));
      append(members, residue_column(n, 1, 3));
      break;
  }
  return DominatingSet::of(construction_host(id, n, removed_edge), std::move(members));
}

}  // namespace meshdom
