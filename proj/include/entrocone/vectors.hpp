#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "entrocone/rational.hpp"
#include "entrocone/subsystem.hpp"

namespace entrocone {

namespace detail {

// Coordinate vector with a fixed length derived from the party count.
// Full vectors are indexed by subsystem_order(n); symmetric ones by
// cardinality 1..ceil(n/2).
template <class Tag, bool Symmetric>
class CoordinateVector {
 public:
  explicit CoordinateVector(int parties)
      : parties_(parties), entries_(expected_length(parties)) {}
  CoordinateVector(int parties, std::vector<Rational> entries)
      : parties_(parties), entries_(std::move(entries)) {
    if (entries_.size() != expected_length(parties)) {
      throw std::invalid_argument("vector length " + std::to_string(entries_.size()) + " does not match " +
                                  std::to_string(expected_length(parties)) + " for n=" + std::to_string(parties));
    }
  }

  static std::size_t expected_length(int parties) {
    return Symmetric ? static_cast<std::size_t>(sym_dimension(parties)) : coordinate_count(parties);
  }

  int parties() const { return parties_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Rational>& entries() const { return entries_; }
  std::span<const Rational> span() const { return entries_; }

  Rational& operator[](std::size_t i) { return entries_[i]; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }

  CoordinateVector& operator+=(const CoordinateVector& o) {
    if (o.parties_ != parties_) throw std::invalid_argument("party count mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  friend CoordinateVector operator+(CoordinateVector a, const CoordinateVector& b) { return a += b; }
  friend CoordinateVector operator*(const Rational& c, CoordinateVector v) {
    for (auto& e : v.entries_) e *= c;
    return v;
  }

  friend bool operator==(const CoordinateVector&, const CoordinateVector&) = default;

 private:
  int parties_;
  std::vector<Rational> entries_;
};

struct EntropyTag {};
struct SymTag {};
struct InequalityTag {};
struct SymInequalityTag {};

}  // namespace detail

/// Subsystem entropies S_I for canonical I, in subsystem_order(n).
using EntropyVector = detail::CoordinateVector<detail::EntropyTag, false>;
/// Symmetric variables S~_1 .. S~_ceil(n/2).
using SymVector = detail::CoordinateVector<detail::SymTag, true>;
/// Coefficients q of q . S >= 0, in subsystem_order(n).
using Inequality = detail::CoordinateVector<detail::InequalityTag, false>;
/// Coefficients of q~ . S~ >= 0.
using SymInequality = detail::CoordinateVector<detail::SymInequalityTag, true>;

}  // namespace entrocone
