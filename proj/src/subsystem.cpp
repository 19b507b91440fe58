#include "entrocone/subsystem.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace entrocone {

namespace {

// Subsystem-order enumeration materializes 2^n - 1 entries.
constexpr int kMaxEnumeratedParties = 26;

void check_parties(int parties) {
  if (parties < 1 || parties > kMaxParties) {
    throw std::out_of_range("party count " + std::to_string(parties) + " outside 1.." +
                            std::to_string(kMaxParties));
  }
}

std::uint64_t binom64(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Appends all k-subsets of [universe] in lexicographic order.
void append_combinations(int parties, int universe, int k, std::vector<Subsystem>& out) {
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 1);
  while (true) {
    std::uint64_t mask = 0;
    for (int p : c) mask |= std::uint64_t{1} << (p - 1);
    out.emplace_back(parties, mask);
    int i = k - 1;
    while (i >= 0 && c[i] == universe - k + i + 1) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace

std::uint64_t full_mask(int count) {
  return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

Subsystem::Subsystem(int parties, std::uint64_t mask) : parties_(parties), mask_(mask) {
  check_parties(parties);
  if (mask == 0) throw std::invalid_argument("empty subsystem");
  if ((mask & ~full_mask(parties + 1)) != 0) {
    throw std::invalid_argument("subsystem contains a party outside [" + std::to_string(parties + 1) + "]");
  }
}

Subsystem Subsystem::of(int parties, const std::vector<int>& members) {
  check_parties(parties);
  std::uint64_t mask = 0;
  for (int p : members) {
    if (p < 1 || p > parties + 1) {
      throw std::invalid_argument("party " + std::to_string(p) + " outside [" + std::to_string(parties + 1) + "]");
    }
    const std::uint64_t bit = std::uint64_t{1} << (p - 1);
    if (mask & bit) throw std::invalid_argument("party " + std::to_string(p) + " listed twice");
    mask |= bit;
  }
  return {parties, mask};
}

Subsystem Subsystem::parse(int parties, const std::string& text) {
  std::vector<int> members;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty party in \"" + text + "\"");
    const std::string tok = item.substr(b, e - b + 1);
    if (!std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) || tok.size() > 3) {
      throw std::invalid_argument("malformed party \"" + tok + "\"");
    }
    members.push_back(std::stoi(tok));
  }
  return of(parties, members);
}

int Subsystem::size() const { return std::popcount(mask_); }

std::vector<int> Subsystem::members() const {
  std::vector<int> out;
  for (int p = 1; p <= parties_ + 1; ++p) {
    if (contains(p)) out.push_back(p);
  }
  return out;
}

Subsystem Subsystem::complement() const {
  const std::uint64_t c = full_mask(parties_ + 1) & ~mask_;
  if (c == 0) throw std::invalid_argument("complement of the full party set is empty");
  return {parties_, c};
}

std::string Subsystem::str() const {
  std::string s;
  for (int p : members()) {
    if (!s.empty()) s += ',';
    s += std::to_string(p);
  }
  return s;
}

Subsystem canonical_subsystem(const Subsystem& raw) {
  if (raw.mask() == full_mask(raw.parties() + 1)) {
    throw std::invalid_argument("the full party set has no canonical coordinate");
  }
  return raw.is_canonical() ? raw : raw.complement();
}

std::size_t coordinate_count(int parties) {
  check_parties(parties);
  return static_cast<std::size_t>(full_mask(parties));
}

int sym_dimension(int parties) {
  check_parties(parties);
  return (parties + 1) / 2;
}

std::vector<Subsystem> subsystem_order(int parties) {
  check_parties(parties);
  if (parties > kMaxEnumeratedParties) {
    throw std::out_of_range("subsystem enumeration limited to n <= " + std::to_string(kMaxEnumeratedParties));
  }
  std::vector<Subsystem> out;
  out.reserve(coordinate_count(parties));
  for (int k = 1; k <= parties; ++k) append_combinations(parties, parties, k, out);
  return out;
}

std::size_t coordinate_index(const Subsystem& canonical) {
  if (!canonical.is_canonical()) throw std::invalid_argument("coordinate_index needs a canonical subsystem");
  const int n = canonical.parties();
  const int k = canonical.size();
  std::uint64_t rank = 0;
  for (int j = 1; j < k; ++j) rank += binom64(n, j);
  int prev = 0;
  int i = 1;
  for (int c : canonical.members()) {
    for (int v = prev + 1; v < c; ++v) rank += binom64(n - v, k - i);
    prev = c;
    ++i;
  }
  return static_cast<std::size_t>(rank);
}

std::vector<Subsystem> q_n_k(int parties, int k) {
  check_parties(parties);
  if (k < 1 || k > sym_dimension(parties)) {
    throw std::out_of_range("cardinality " + std::to_string(k) + " outside 1..ceil(n/2)");
  }
  std::vector<Subsystem> out;
  append_combinations(parties, parties + 1, k, out);
  return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v]) {
      throw std::invalid_argument("permutation images are not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int size) {
  std::vector<int> im(size);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int size, int a, int b) {
  std::vector<int> im(size);
  std::iota(im.begin(), im.end(), 1);
  if (a < 1 || b < 1 || a > size || b > size) throw std::invalid_argument("transposition out of range");
  std::swap(im[a - 1], im[b - 1]);
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Subsystem apply_permutation(const Permutation& sigma, const Subsystem& raw) {
  if (sigma.size() != raw.parties() + 1) {
    throw std::invalid_argument("permutation acts on [" + std::to_string(sigma.size()) + "], subsystem lives in [" +
                                std::to_string(raw.parties() + 1) + "]");
  }
  std::uint64_t mask = 0;
  for (int p : raw.members()) mask |= std::uint64_t{1} << (sigma(p) - 1);
  return {raw.parties(), mask};
}

std::vector<Permutation> all_permutations(int size) {
  std::vector<int> im(size);
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

}  // namespace entrocone
