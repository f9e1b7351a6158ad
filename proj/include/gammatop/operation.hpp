#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gammatop/error.hpp"
#include "gammatop/space.hpp"

namespace gammatop {

enum class OperationKind { identity, closure, int_closure, pivot, custom };

struct OperationTag {
  OperationKind kind = OperationKind::custom;
  std::size_t pivot = 0;  // meaningful for OperationKind::pivot only

  friend bool operator==(const OperationTag&, const OperationTag&) = default;
};

constexpr std::string_view to_string(OperationKind kind) {
  switch (kind) {
    case OperationKind::identity: return "identity";
    case OperationKind::closure: return "closure";
    case OperationKind::int_closure: return "int-closure";
    case OperationKind::pivot: return "pivot";
    case OperationKind::custom: return "table";
  }
  return "table";
}

/// An operation on the opens of a space: a total table V -> gamma(V) with V ⊆ gamma(V).
///
/// Images are stored aligned with FiniteSpace::opens(), so image(i) is the
/// value at the i-th open in canonical order.
class GammaOperation {
 public:
  std::span<const PointSet> images() const { return images_; }
  PointSet image(std::size_t open_index) const { return images_.at(open_index); }
  const OperationTag& tag() const { return tag_; }

  /// Same table, regardless of how it was built.
  friend bool operator==(const GammaOperation& a, const GammaOperation& b) { return a.images_ == b.images_; }

 private:
  GammaOperation(std::vector<PointSet> images, OperationTag tag) : images_(std::move(images)), tag_(tag) {}

  friend GammaOperation make_operation(const FiniteSpace&, std::vector<PointSet>, OperationTag);

  std::vector<PointSet> images_;
  OperationTag tag_;
};

/// Validates an image table aligned with space.opens().
inline GammaOperation make_operation(const FiniteSpace& space, std::vector<PointSet> images,
                                     OperationTag tag = {}) {
  const auto opens = space.opens();
  if (images.size() != opens.size()) {
    throw Error(ErrorCode::TableNotTotal, "operation table must have one image per open set");
  }
  for (std::size_t i = 0; i < opens.size(); ++i) {
    if (!images[i].subset_of(space.full())) {
      throw Error(ErrorCode::PointOutOfRange, "image references an undeclared point", {opens[i], images[i]}, i);
    }
    if (!opens[i].subset_of(images[i])) {
      throw Error(ErrorCode::NotExpansive, "image does not contain its open set", {opens[i], images[i]}, i);
    }
  }
  return GammaOperation(std::move(images), tag);
}

/// Expands one of the built-in families to an explicit table.
inline GammaOperation make_operation(const FiniteSpace& space, OperationTag tag) {
  std::vector<PointSet> images;
  images.reserve(space.opens().size());
  for (PointSet v : space.opens()) {
    switch (tag.kind) {
      case OperationKind::identity: images.push_back(v); break;
      case OperationKind::closure: images.push_back(closure(space, v)); break;
      case OperationKind::int_closure: images.push_back(interior(space, closure(space, v))); break;
      case OperationKind::pivot:
        if (tag.pivot >= space.size()) {
          throw Error(ErrorCode::PivotNotInSpace, "pivot point " + std::to_string(tag.pivot) + " is not in the space");
        }
        images.push_back(v.contains(tag.pivot) ? v : closure(space, v));
        break;
      case OperationKind::custom:
        throw Error(ErrorCode::TableNotTotal, "a custom operation needs an explicit table");
    }
  }
  return make_operation(space, std::move(images), tag);
}

/// Builds an operation from (open, image) pairs in any order.
inline GammaOperation make_operation(const FiniteSpace& space, std::span<const std::pair<PointSet, PointSet>> entries) {
  const auto opens = space.opens();
  std::vector<PointSet> images(opens.size());
  std::vector<bool> seen(opens.size(), false);
  for (const auto& [open, image] : entries) {
    const auto idx = space.index_of_open(open);
    if (!idx) throw Error(ErrorCode::UnknownOpen, "table key is not an open set", {open});
    if (seen[*idx] && images[*idx] != image) {
      throw Error(ErrorCode::ParseError, "conflicting table entries for one open set", {open});
    }
    seen[*idx] = true;
    images[*idx] = image;
  }
  for (std::size_t i = 0; i < opens.size(); ++i) {
    if (!seen[i]) throw Error(ErrorCode::TableNotTotal, "no table entry for an open set", {opens[i]}, i);
  }
  return make_operation(space, std::move(images));
}

// ---------------------------------------------------------------------------
// Operation pools

/// Number of expansive operations on the space: the product over opens V of 2^|X - V|.
/// Saturates at the largest uint64 value.
inline std::uint64_t operation_count(const FiniteSpace& space) {
  std::size_t free_bits = 0;
  for (PointSet v : space.opens()) free_bits += (space.full() - v).size();
  if (free_bits >= 64) return std::numeric_limits<std::uint64_t>::max();
  return std::uint64_t{1} << free_bits;
}

/// The index-th expansive operation in table-lexicographic order
/// (the image of the first open is the most significant digit).
inline GammaOperation operation_at(const FiniteSpace& space, std::uint64_t index) {
  const auto opens = space.opens();
  std::vector<PointSet> images(opens.size());
  for (std::size_t i = opens.size(); i-- > 0;) {
    const PointSet free = space.full() - opens[i];
    const std::uint64_t radix = std::uint64_t{1} << free.size();
    images[i] = opens[i] | deposit_bits(index % radix, free);
    index /= radix;
  }
  return make_operation(space, std::move(images));
}

/// identity, closure, int-closure, pivot(0..n-1); duplicate tables dropped (first kept).
inline std::vector<GammaOperation> builtin_operations(const FiniteSpace& space) {
  std::vector<GammaOperation> out;
  auto add = [&](OperationTag tag) {
    GammaOperation op = make_operation(space, tag);
    for (const auto& existing : out) {
      if (existing == op) return;
    }
    out.push_back(std::move(op));
  };
  add({OperationKind::identity});
  add({OperationKind::closure});
  add({OperationKind::int_closure});
  for (std::size_t p = 0; p < space.size(); ++p) add({OperationKind::pivot, p});
  return out;
}

namespace detail {
constexpr std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

/// A uniformly random expansive operation, fully determined by (seed, stream, draw).
inline GammaOperation sample_operation(const FiniteSpace& space, std::uint64_t seed, std::uint64_t stream,
                                       std::uint64_t draw) {
  std::uint64_t state = seed;
  state = detail::splitmix64(state) ^ stream;
  state = detail::splitmix64(state) ^ draw;
  std::vector<PointSet> images;
  images.reserve(space.opens().size());
  for (PointSet v : space.opens()) {
    const PointSet free = space.full() - v;
    images.push_back(v | deposit_bits(detail::splitmix64(state), free));
  }
  return make_operation(space, std::move(images));
}

}  // namespace gammatop
