#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace entrocone {

/// Largest supported party count; subsystems of [n+1] live in a 64-bit mask.
inline constexpr int kMaxParties = 62;

/// Nonempty set of parties drawn from [n+1], where party n+1 is the purifier.
///
/// Bit p-1 of the mask stands for party p. A subsystem is canonical when it
/// does not contain the purifier; canonical subsystems index entropy vectors.
class Subsystem {
 public:
  Subsystem(int parties, std::uint64_t mask);
  static Subsystem of(int parties, const std::vector<int>& members);
  /// Parses "1,2,5" (order and whitespace free, duplicates rejected).
  static Subsystem parse(int parties, const std::string& text);

  int parties() const { return parties_; }
  std::uint64_t mask() const { return mask_; }
  int size() const;
  bool contains(int party) const { return party >= 1 && party <= 64 && ((mask_ >> (party - 1)) & 1u); }
  bool is_canonical() const { return !contains(parties_ + 1); }
  std::vector<int> members() const;

  /// Complement in [n+1]; throws if that would be empty.
  Subsystem complement() const;

  /// Ascending members joined by commas, e.g. "1,3".
  std::string str() const;

  friend bool operator==(const Subsystem&, const Subsystem&) = default;

 private:
  int parties_;
  std::uint64_t mask_;
};

/// Mask with bits 0..count-1 set.
std::uint64_t full_mask(int count);

/// J itself when the purifier is absent, else [n+1] \ J.
/// Rejects the empty set and the whole of [n+1].
Subsystem canonical_subsystem(const Subsystem& raw);

/// All 2^n - 1 canonical subsystems ordered by cardinality, then
/// lexicographically on ascending member lists.
std::vector<Subsystem> subsystem_order(int parties);

/// Position of a canonical subsystem in subsystem_order(parties).
std::size_t coordinate_index(const Subsystem& canonical);

/// Number of coordinates of an n-party entropy vector, 2^n - 1.
std::size_t coordinate_count(int parties);

/// Number of symmetric variables, ceil(n/2).
int sym_dimension(int parties);

/// All k-subsets of [n+1] in lexicographic order, 1 <= k <= ceil(n/2).
std::vector<Subsystem> q_n_k(int parties, int k);

/// Bijection on [n+1], stored 1-based: images[p-1] = sigma(p).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int size);
  static Permutation transposition(int size, int a, int b);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int p) const { return images_.at(p - 1); }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// sigma(J) = { sigma(j) : j in J }. Requires sigma to act on [n+1].
Subsystem apply_permutation(const Permutation& sigma, const Subsystem& raw);

/// Every permutation of [size] in lexicographic order of image lists.
std::vector<Permutation> all_permutations(int size);

}  // namespace entrocone
