#include <stdexcept>

#include "entrocone/fixtures.hpp"
#include "entrocone/inequalities.hpp"

namespace entrocone {

namespace {

struct RayRow {
  int parties;
  int row;
  const char* vector;
  std::vector<int> sym;
  bool extremal;
  int weight;  // 0 when not extremal, -1 for "any"
};

struct FacetRow {
  int parties;
  int row;
  const char* terms;
  std::vector<int> sym;
  bool is_facet;
};

std::vector<BigInt> big(const std::vector<int>& v) { return {v.begin(), v.end()}; }

// Extreme rays of HEC_n, n <= 5, one representative per orbit.
const RayRow kRays[] = {
    {2, 1, "(11; 0)", {1}, true, -1},

    {3, 1, "(110; 011; 0)", {3, 4}, true, 3},
    {3, 2, "(111; 222; 1)", {1, 2}, true, 1},

    {4, 1, "(1100; 011110; 0011; 0)", {2, 3}, true, 4},
    {4, 2, "(1110; 221211; 1222; 1)", {1, 2}, true, 2},
    {4, 3, "(1111; 222222; 3333; 2)", {1, 2}, true, 2},

    {5, 1, "(11000; 0111111000; 0001111110; 00011; 0)", {5, 8, 9}, true, 5},
    {5, 2, "(11100; 2211211110; 1222212211; 11222; 1)", {5, 10, 12}, false, 0},
    {5, 3, "(11110; 2221221211; 3323223222; 23333; 2)", {5, 10, 12}, false, 0},
    {5, 4, "(11111; 2222222222; 2233333323; 22222; 1)", {10, 20, 27}, false, 0},
    {5, 5, "(11111; 2222222222; 3332233323; 22222; 1)", {10, 20, 27}, false, 0},
    {5, 6, "(11112; 2223223233; 3343443444; 43333; 2)", {10, 20, 27}, false, 0},
    {5, 7, "(11111; 2222222222; 2222333333; 22222; 1)", {5, 10, 13}, false, 0},
    {5, 8, "(11111; 2222222222; 2233223333; 22222; 1)", {5, 10, 13}, false, 0},
    {5, 9, "(33333; 6666666666; 5777799999; 66666; 3)", {5, 10, 13}, false, 0},
    {5, 10, "(33333; 6666666666; 5777979999; 66666; 3)", {5, 10, 13}, false, 0},
    {5, 11, "(33333; 6666666666; 5777999799; 66666; 3)", {5, 10, 13}, false, 0},
    {5, 12, "(11111; 2222222222; 1333333333; 22222; 1)", {5, 10, 14}, false, 0},
    {5, 13, "(11111; 2222222222; 3333333333; 22222; 1)", {1, 2, 3}, true, 1},
    {5, 14, "(11111; 2222222222; 3333333333; 44444; 3)", {4, 8, 9}, true, 3},
    {5, 15, "(11112; 2223223233; 3323443444; 43333; 2)", {20, 40, 51}, false, 0},
    {5, 16, "(11122; 2233233334; 3444454455; 55444; 3)", {25, 50, 63}, false, 0},
    {5, 17, "(11222; 2333333444; 4445355534; 44433; 2)", {25, 50, 63}, false, 0},
    {5, 18, "(22223; 4445445455; 4656576777; 65555; 3)", {7, 14, 18}, false, 0},
    {5, 19, "(22223; 4445445455; 4656756777; 65555; 3)", {7, 14, 18}, false, 0},
};

// Facets of HEC_n, n <= 5. Party letters A..E stand for 1..5.
const FacetRow kHolographicFacets[] = {
    {2, 1, "A + B - AB", {1}, true},

    {3, 1, "A + B - AB", {2, -1}, true},
    {3, 2, "AB + AC + BC - A - B - C - ABC", {-4, 3}, true},

    {4, 1, "A + B - AB", {2, -1}, true},
    {4, 2, "AB + AC + BC - A - B - C - ABC", {-3, 2}, true},

    {5, 1, "A + B - AB", {2, -1, 0}, true},
    {5, 2, "AB + AC + BC - A - B - C - ABC", {-3, 3, -1}, true},
    {5, 3, "AB + ACD + BCD - A - B - CD - ABCD", {-2, -1, 2}, false},
    {5, 4, "AD + BC + ABE + ACE + ADE + BDE + CDE - A - B - C - D - AE - DE - BCE - ABDE - ACDE", {-2, -1, 2}, false},
    {5, 5, "ABC + BCD + CDE + ADE + ABE - AB - BC - CD - DE - AE - ABCDE", {-1, -5, 5}, false},
    {5, 6, "2ABC + ABD + ABE + ACD + ADE + BCE + BDE - AB - AC - AD - BC - BE - DE - ABCD - ABCE - ABDE", {0, -9, 8},
     true},
    {5, 7,
     "ABC + ABD + ABE + ACD + ACE + ADE + BCE + BDE + CDE - AB - AC - AD - BE - CE - DE - BCD - ABCE - ABDE - ACDE",
     {0, -9, 8}, true},
    {5, 8,
     "3ABC + 3ABD + 3ACE + ABE + ACD + ADE + BCD + BCE + BDE + CDE - AD - AE - BC - DE - ABDE - ACDE - 2AB - 2AC"
     " - 2BD - 2CE - 2ABCD - 2ABCE",
     {0, -9, 8}, true},
};

// SA and SSA instances bounding the outer approximation of QEC_n, n <= 5.
const FacetRow kQuantumFacets[] = {
    {2, 1, "A + B - AB", {1}, true},

    {3, 1, "A + B - AB", {2, -1}, true},
    {3, 2, "A - B + AB", {0, 1}, false},
    // SSA for I = AC, J = BC; the C term must be negative to symmetrize to
    // (-1, 1), same as the n = 4 row 5 entry.
    {3, 3, "AC + BC - C - ABC", {-1, 1}, true},

    {4, 1, "A + B - AB", {2, -1}, true},
    {4, 2, "A - B + AB", {0, 1}, false},
    {4, 3, "A + BC - ABC", {1, 0}, false},
    {4, 4, "-A + BC + ABC", {-1, 2}, false},
    {4, 5, "AC + BC - C - ABC", {-1, 1}, true},

    {5, 1, "A + B - AB", {2, -1, 0}, true},
    {5, 2, "A - B + AB", {0, 1, 0}, false},
    {5, 3, "A + BC - ABC", {1, 1, -1}, false},
    {5, 4, "A - BC + ABC", {1, -1, 1}, false},
    {5, 5, "-A + BC + ABC", {-1, 1, 1}, false},
    {5, 6, "-C + BC + AC - ABC", {-1, 2, -1}, true},
    {5, 7, "-A - B + AC + BC", {-1, 1, 0}, false},
    {5, 8, "-D + CD + ABD - ABCD", {-1, 0, 1}, false},
    {5, 9, "-CD + BCD + ACD - ABCD", {0, -1, 1}, true},
};

std::vector<FixtureFacet> build_facets(const auto& rows, FacetTable table) {
  std::vector<FixtureFacet> out;
  for (const auto& r : rows) {
    out.push_back({r.parties, r.row, table, parse_letter_inequality(r.parties, r.terms), big(r.sym), r.is_facet});
  }
  return out;
}

}  // namespace

EntropyVector parse_grouped_vector(int parties, std::string_view text) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("grouped vector \"" + std::string(text) + "\": " + why);
  };
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') fail("missing parentheses");
  std::vector<Rational> entries;
  int group = 1;
  std::size_t in_group = 0;
  auto close_group = [&] {
    if (in_group != static_cast<std::size_t>(binomial(parties, group).get_ui())) {
      fail("group " + std::to_string(group) + " has " + std::to_string(in_group) + " entries");
    }
    ++group;
    in_group = 0;
  };
  for (char c : text.substr(1, text.size() - 2)) {
    if (c == ' ') continue;
    if (c == ';') {
      close_group();
    } else if (c >= '0' && c <= '9') {
      entries.emplace_back(c - '0');
      ++in_group;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }
  close_group();
  if (group != parties + 1) fail("expected " + std::to_string(parties) + " groups");
  return EntropyVector(parties, std::move(entries));
}

const std::vector<FixtureRay>& holographic_rays() {
  static const std::vector<FixtureRay> rays = [] {
    std::vector<FixtureRay> out;
    for (const auto& r : kRays) {
      FixtureRay f{r.parties, r.row, parse_grouped_vector(r.parties, r.vector), big(r.sym), r.extremal, {}, false};
      if (r.weight == -1) {
        f.any_weight = true;
        f.star_weight = r.parties;
      } else if (r.weight > 0) {
        f.star_weight = r.weight;
      }
      out.push_back(std::move(f));
    }
    return out;
  }();
  return rays;
}

const std::vector<FixtureFacet>& holographic_facets() {
  static const std::vector<FixtureFacet> facets = build_facets(kHolographicFacets, FacetTable::Holographic);
  return facets;
}

const std::vector<FixtureFacet>& quantum_facets() {
  static const std::vector<FixtureFacet> facets = build_facets(kQuantumFacets, FacetTable::Quantum);
  return facets;
}

}  // namespace entrocone
