#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gammatop/error.hpp"
#include "gammatop/point_set.hpp"

namespace gammatop {

/// Display names "a", "b", ... for the first n points.
inline std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return labels;
}

/// A finite topological space on the points {0, ..., n-1}.
///
/// Immutable after construction; copies share the underlying tables. The open
/// family is stored in canonical order (cardinality, then mask), and the closed
/// family is precomputed because every property checker quantifies over it.
class FiniteSpace {
 public:
  std::size_t size() const { return data_->n; }
  PointSet full() const { return PointSet::full(data_->n); }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::string& label(std::size_t point) const { return data_->labels.at(point); }

  std::span<const PointSet> opens() const { return data_->opens; }
  std::span<const PointSet> closeds() const { return data_->closeds; }

  bool is_open(PointSet s) const { return index_of_open(s).has_value(); }
  bool is_closed(PointSet s) const { return s.subset_of(full()) && is_open(full() - s); }

  std::optional<std::size_t> index_of_open(PointSet s) const {
    if (!s.subset_of(full())) return std::nullopt;
    const auto idx = data_->open_index[s.mask()];
    if (idx < 0) return std::nullopt;
    return static_cast<std::size_t>(idx);
  }

  /// Topologies compare by point count and open family; labels are cosmetic.
  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.data_ == b.data_ || (a.size() == b.size() && a.data_->opens == b.data_->opens);
  }

  /// Lexicographic comparison of the canonical open families (enumeration order).
  friend bool canonical_before(const FiniteSpace& a, const FiniteSpace& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    const auto& x = a.data_->opens;
    const auto& y = b.data_->opens;
    if (x.size() != y.size()) return x.size() < y.size();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        [](PointSet p, PointSet q) { return p.mask() < q.mask(); });
  }

 private:
  struct Data {
    std::size_t n = 0;
    std::vector<std::string> labels;
    std::vector<PointSet> opens;
    std::vector<PointSet> closeds;
    std::vector<std::int32_t> open_index;
  };

  explicit FiniteSpace(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  friend FiniteSpace validate_space(std::size_t n, std::span<const PointSet> candidate,
                                    std::vector<std::string> labels);

  std::shared_ptr<const Data> data_;
};

/// Checks the topology axioms on a raw open family and returns the canonical space.
inline FiniteSpace validate_space(std::size_t n, std::span<const PointSet> candidate,
                                  std::vector<std::string> labels = {}) {
  if (n == 0 || n > kMaxPoints) {
    throw Error(ErrorCode::SizeTooLarge, "point count must be between 1 and " + std::to_string(kMaxPoints));
  }
  if (labels.empty()) labels = default_labels(n);
  if (labels.size() != n) throw Error(ErrorCode::ParseError, "label count does not match point count");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (labels[i] == labels[j]) throw Error(ErrorCode::ParseError, "duplicate point label '" + labels[i] + "'");
    }
  }

  const PointSet full = PointSet::full(n);
  std::vector<PointSet> opens;
  for (PointSet s : candidate) {
    if (!s.subset_of(full)) throw Error(ErrorCode::PointOutOfRange, "open set references an undeclared point", {s});
    opens.push_back(s);
  }
  std::sort(opens.begin(), opens.end(), CanonicalLess{});
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

  const bool has_empty = std::find(opens.begin(), opens.end(), PointSet{}) != opens.end();
  const bool has_full = std::find(opens.begin(), opens.end(), full) != opens.end();
  if (!has_empty || !has_full) {
    throw Error(ErrorCode::MissingEmptyOrFull, has_empty ? "the full set is not open" : "the empty set is not open");
  }

  std::vector<std::int32_t> index(std::size_t{1} << n, -1);
  for (std::size_t i = 0; i < opens.size(); ++i) index[opens[i].mask()] = static_cast<std::int32_t>(i);

  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      if (index[(opens[i] | opens[j]).mask()] < 0) {
        throw Error(ErrorCode::NotClosedUnderUnion, "union of two opens is not open", {opens[i], opens[j]});
      }
      if (index[(opens[i] & opens[j]).mask()] < 0) {
        throw Error(ErrorCode::NotClosedUnderIntersection, "intersection of two opens is not open",
                    {opens[i], opens[j]});
      }
    }
  }

  auto data = std::make_shared<FiniteSpace::Data>();
  data->n = n;
  data->labels = std::move(labels);
  data->closeds.reserve(opens.size());
  for (PointSet u : opens) data->closeds.push_back(full - u);
  std::sort(data->closeds.begin(), data->closeds.end(), CanonicalLess{});
  data->opens = std::move(opens);
  data->open_index = std::move(index);
  return FiniteSpace(std::move(data));
}

inline FiniteSpace discrete_space(std::size_t n) {
  std::vector<PointSet> all;
  for_each_subset(PointSet::full(n), [&](PointSet s) { all.push_back(s); });
  return validate_space(n, all);
}

inline FiniteSpace indiscrete_space(std::size_t n) {
  const PointSet opens[] = {PointSet{}, PointSet::full(n)};
  return validate_space(n, opens);
}

/// Largest open subset of `a`.
inline PointSet interior(const FiniteSpace& space, PointSet a) {
  PointSet out;
  for (PointSet u : space.opens()) {
    if (u.subset_of(a)) out |= u;
  }
  return out;
}

/// Smallest closed superset of `a`.
inline PointSet closure(const FiniteSpace& space, PointSet a) {
  PointSet out = space.full();
  for (PointSet f : space.closeds()) {
    if (a.subset_of(f)) out &= f;
  }
  return out;
}

inline bool is_T2(const FiniteSpace& space) {
  const auto opens = space.opens();
  for (std::size_t x = 0; x < space.size(); ++x) {
    for (std::size_t y = x + 1; y < space.size(); ++y) {
      const bool separated = std::any_of(opens.begin(), opens.end(), [&](PointSet u) {
        return u.contains(x) && !u.contains(y) &&
               std::any_of(opens.begin(), opens.end(),
                           [&](PointSet v) { return v.contains(y) && !v.intersects(u); });
      });
      if (!separated) return false;
    }
  }
  return true;
}

/// A point outside a closed set and the set have disjoint open neighbourhoods.
/// No T1 requirement is folded in.
inline bool is_regular(const FiniteSpace& space) {
  for (PointSet f : space.closeds()) {
    for (std::size_t x = 0; x < space.size(); ++x) {
      if (f.contains(x)) continue;
      const auto opens = space.opens();
      const bool separated = std::any_of(opens.begin(), opens.end(), [&](PointSet u) {
        return u.contains(x) && f.subset_of(interior(space, space.full() - u));
      });
      if (!separated) return false;
    }
  }
  return true;
}

/// Disjoint closed sets have disjoint open neighbourhoods. No T1 requirement.
inline bool is_normal(const FiniteSpace& space) {
  const auto closeds = space.closeds();
  for (std::size_t i = 0; i < closeds.size(); ++i) {
    for (std::size_t j = i + 1; j < closeds.size(); ++j) {
      const PointSet a = closeds[i];
      const PointSet b = closeds[j];
      if (a.intersects(b)) continue;
      const auto opens = space.opens();
      const bool separated = std::any_of(opens.begin(), opens.end(), [&](PointSet u) {
        return a.subset_of(u) && b.subset_of(interior(space, space.full() - u));
      });
      if (!separated) return false;
    }
  }
  return true;
}

}  // namespace gammatop
