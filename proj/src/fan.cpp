#include "conealg/fan.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace conealg {

ExponentVector::ExponentVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InputError("exponent vector must have at least one entry");
  for (std::int64_t e : entries_) {
    if (e < 0) throw InputError("exponents must be nonnegative");
  }
}

bool ExponentVector::is_unit() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](std::int64_t e) { return e == 0; });
}

namespace {

// a_i / b_i compared with a_j / b_j by cross-multiplication.
std::strong_ordering compare_ratio(std::int64_t ai, std::int64_t bi, std::int64_t aj,
                                   std::int64_t bj) {
  return checked_mul(ai, bj) <=> checked_mul(aj, bi);
}

}  // namespace

FanOrdered fan_order(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw InputError("exponent vectors differ in length");

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 || b[i] != 0) kept.push_back(i);
  }
  if (kept.empty()) throw InputError("both ideals are the unit ideal");

  std::stable_sort(kept.begin(), kept.end(), [&](std::size_t i, std::size_t j) {
    return compare_ratio(a[i], b[i], a[j], b[j]) > 0;
  });

  std::vector<std::int64_t> a_sorted, b_sorted;
  for (std::size_t i : kept) {
    a_sorted.push_back(a[i]);
    b_sorted.push_back(b[i]);
  }
  return {ExponentVector(std::move(a_sorted)), ExponentVector(std::move(b_sorted)),
          FanOrdering{std::move(kept)}};
}

bool is_fan_ordered(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (compare_ratio(a[i], b[i], a[i + 1], b[i + 1]) < 0) return false;
  }
  return true;
}

Fan build_fan(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw InputError("exponent vectors differ in length");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0 && b[i] == 0) {
      throw InputError("index " + std::to_string(i + 1) + " is absent from both ideals");
    }
  }
  if (!is_fan_ordered(a, b)) throw InputError("exponent vectors are not fan ordered");

  std::vector<LatticePoint2> rays;
  rays.reserve(a.size() + 2);
  rays.emplace_back(0, 1);
  for (std::size_t i = 0; i < a.size(); ++i) rays.emplace_back(b[i], a[i]);
  rays.emplace_back(1, 0);

  Fan fan;
  fan.a_ = a;
  fan.b_ = b;
  for (std::size_t i = 0; i + 1 < rays.size(); ++i) fan.cones_.emplace_back(rays[i], rays[i + 1]);
  return fan;
}

std::size_t Fan::locate(const LatticePoint2& p) const {
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    if (cones_[i].contains(p)) return i;
  }
  throw std::logic_error("fan does not cover " + to_string(p));
}

}  // namespace conealg
