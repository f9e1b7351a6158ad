#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace gammatop {

/// Largest ground set supported. Dense per-subset tables are 2^n entries.
inline constexpr std::size_t kMaxPoints = 16;

/// A subset of the ground set {0, ..., n-1}, stored as a membership mask.
class PointSet {
 public:
  using Mask = std::uint32_t;

  constexpr PointSet() = default;
  constexpr explicit PointSet(Mask mask) : mask_(mask) {}

  static constexpr PointSet full(std::size_t n) {
    return PointSet(n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1);
  }
  static constexpr PointSet singleton(std::size_t point) { return PointSet(Mask{1} << point); }

  constexpr Mask mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  constexpr bool contains(std::size_t point) const { return (mask_ >> point) & 1U; }
  constexpr bool subset_of(PointSet other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool intersects(PointSet other) const { return (mask_ & other.mask_) != 0; }

  constexpr PointSet with(std::size_t point) const { return PointSet(mask_ | (Mask{1} << point)); }

  /// Highest point index plus one; 0 for the empty set.
  constexpr std::size_t extent() const { return 32 - static_cast<std::size_t>(std::countl_zero(mask_)); }

  std::vector<std::size_t> points() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return out;
  }

  friend constexpr PointSet operator|(PointSet a, PointSet b) { return PointSet(a.mask_ | b.mask_); }
  friend constexpr PointSet operator&(PointSet a, PointSet b) { return PointSet(a.mask_ & b.mask_); }
  /// Set difference.
  friend constexpr PointSet operator-(PointSet a, PointSet b) { return PointSet(a.mask_ & ~b.mask_); }
  constexpr PointSet& operator|=(PointSet o) { mask_ |= o.mask_; return *this; }
  constexpr PointSet& operator&=(PointSet o) { mask_ &= o.mask_; return *this; }

  friend constexpr bool operator==(PointSet, PointSet) = default;
  friend constexpr auto operator<=>(PointSet, PointSet) = default;

 private:
  Mask mask_ = 0;
};

/// Canonical family order: by cardinality, then by mask value.
struct CanonicalLess {
  constexpr bool operator()(PointSet a, PointSet b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.mask() < b.mask();
  }
};

/// Calls fn(sub) for every subset of `within`, in increasing mask order.
template <class Fn>
constexpr void for_each_subset(PointSet within, Fn&& fn) {
  const auto full = within.mask();
  PointSet::Mask sub = 0;
  while (true) {
    fn(PointSet(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

/// Scatters the low bits of `bits` onto the members of `positions` (software pdep).
constexpr PointSet deposit_bits(std::uint64_t bits, PointSet positions) {
  PointSet::Mask out = 0;
  for (PointSet::Mask m = positions.mask(); m != 0 && bits != 0; m &= m - 1, bits >>= 1) {
    if (bits & 1U) out |= m & (~m + 1);
  }
  return PointSet(out);
}

}  // namespace gammatop
