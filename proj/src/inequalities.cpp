#include "entrocone/inequalities.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace entrocone {

namespace {

void require_same_ambient(std::initializer_list<const Subsystem*> parts) {
  const int n = (*parts.begin())->parties();
  for (const auto* s : parts) {
    if (s->parties() != n) throw std::invalid_argument("subsystems live in different ambient party sets");
    if (!s->is_canonical()) throw std::invalid_argument("subsystem " + s->str() + " includes the purifier");
  }
}

void add(Inequality& q, const Subsystem& raw, const Rational& c) {
  q[coordinate_index(canonical_subsystem(raw))] += c;
}

}  // namespace

Inequality sa_instance(const Subsystem& i, const Subsystem& j) {
  require_same_ambient({&i, &j});
  if (i.mask() & j.mask()) throw std::invalid_argument("SA needs disjoint subsystems");
  Inequality q(i.parties());
  add(q, i, 1);
  add(q, j, 1);
  add(q, Subsystem(i.parties(), i.mask() | j.mask()), -1);
  return q;
}

Inequality ssa_instance(const Subsystem& i, const Subsystem& j) {
  require_same_ambient({&i, &j});
  const std::uint64_t meet = i.mask() & j.mask();
  if (meet == 0) throw std::invalid_argument("SSA needs overlapping subsystems");
  if (meet == i.mask() || meet == j.mask()) throw std::invalid_argument("SSA subsystems must not be nested");
  Inequality q(i.parties());
  add(q, i, 1);
  add(q, j, 1);
  add(q, Subsystem(i.parties(), meet), -1);
  add(q, Subsystem(i.parties(), i.mask() | j.mask()), -1);
  return q;
}

Inequality mmi_instance(const Subsystem& i, const Subsystem& j, const Subsystem& k) {
  require_same_ambient({&i, &j, &k});
  if ((i.mask() & j.mask()) || (i.mask() & k.mask()) || (j.mask() & k.mask())) {
    throw std::invalid_argument("MMI needs pairwise disjoint subsystems");
  }
  const int n = i.parties();
  Inequality q(n);
  add(q, Subsystem(n, i.mask() | j.mask()), 1);
  add(q, Subsystem(n, i.mask() | k.mask()), 1);
  add(q, Subsystem(n, j.mask() | k.mask()), 1);
  add(q, i, -1);
  add(q, j, -1);
  add(q, k, -1);
  const std::uint64_t all = i.mask() | j.mask() | k.mask();
  add(q, Subsystem(n, all), -1);
  return q;
}

Inequality hec6_sample() {
  return parse_letter_inequality(6,
                                 "-AB - AC - AD - BE - BF - CE"
                                 " + ABC + ABD + ABE + ABF + ACD + ACE + BCE + BEF"
                                 " - ABCD - ABCE - ABEF");
}

Inequality parse_letter_inequality(int parties, std::string_view text) {
  Inequality q(parties);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument(what + " at offset " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
  };
  bool first = true;
  skip_space();
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_space();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    std::string digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) digits += text[pos++];
    std::vector<int> members;
    while (pos < text.size() && std::isupper(static_cast<unsigned char>(text[pos]))) {
      members.push_back(text[pos++] - 'A' + 1);
    }
    if (members.empty()) fail("expected a subsystem");
    const Rational coeff = digits.empty() ? Rational(1) : Rational::parse(digits);
    add(q, Subsystem::of(parties, members), sign > 0 ? coeff : -coeff);
    first = false;
    skip_space();
  }
  return q;
}

}  // namespace entrocone
