#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "conealg/lattice.hpp"

namespace conealg {

/// Exponents of a principal ideal's generator over a fixed list of primes or
/// variables. Entries are nonnegative and there is at least one entry; an
/// all-zero vector stands for the unit ideal.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<std::int64_t> entries);
  ExponentVector(std::initializer_list<std::int64_t> entries)
      : ExponentVector(std::vector<std::int64_t>(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_.at(i); }
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
  bool is_unit() const noexcept;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

/// `original_index[k]` is the position in the caller's vectors of the k-th
/// fan-ordered entry. Indices where both exponents vanish are absent.
struct FanOrdering {
  std::vector<std::size_t> original_index;

  friend bool operator==(const FanOrdering&, const FanOrdering&) = default;
};

struct FanOrdered {
  ExponentVector a;
  ExponentVector b;
  FanOrdering ordering;
};

/// Stable sort of the index pairs by a_i / b_i descending (b_i = 0 is +inf).
FanOrdered fan_order(const ExponentVector& a, const ExponentVector& b);

bool is_fan_ordered(const ExponentVector& a, const ExponentVector& b);

/// The cones C_0..C_n between consecutive rays (0,1), (b_1,a_1), ..., (b_n,a_n), (1,0).
class Fan {
 public:
  const ExponentVector& a() const noexcept { return a_; }
  const ExponentVector& b() const noexcept { return b_; }
  const std::vector<Cone2>& cones() const noexcept { return cones_; }
  std::size_t size() const noexcept { return cones_.size(); }
  const Cone2& cone(std::size_t i) const { return cones_.at(i); }

  /// Smallest index of a cone containing p.
  std::size_t locate(const LatticePoint2& p) const;

  friend Fan build_fan(const ExponentVector& a, const ExponentVector& b);

 private:
  ExponentVector a_;
  ExponentVector b_;
  std::vector<Cone2> cones_;
};

/// Requires fan-ordered input with no index where a_i = b_i = 0.
Fan build_fan(const ExponentVector& a, const ExponentVector& b);

inline std::size_t locate(const Fan& f, const LatticePoint2& p) { return f.locate(p); }

}  // namespace conealg
