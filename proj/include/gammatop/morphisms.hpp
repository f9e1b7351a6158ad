#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "gammatop/context.hpp"
#include "gammatop/enumerate.hpp"
#include "gammatop/error.hpp"

namespace gammatop {

/// A point function between two operation-decorated spaces.
class SpaceMap {
 public:
  SpaceMap(GammaContext domain, GammaContext codomain, std::vector<std::size_t> table)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
    if (domain_.is_relative() || codomain_.is_relative()) {
      throw Error(ErrorCode::PreconditionViolated, "maps are defined between operation-based contexts");
    }
    if (table_.size() != domain_.space().size()) {
      throw Error(ErrorCode::PointOutOfRange, "map table must assign every domain point");
    }
    for (std::size_t x = 0; x < table_.size(); ++x) {
      if (table_[x] >= codomain_.space().size()) {
        throw Error(ErrorCode::PointOutOfRange, "map image is not a codomain point", {PointSet::singleton(x)}, x);
      }
    }
  }

  const GammaContext& domain() const { return domain_; }
  const GammaContext& codomain() const { return codomain_; }
  const std::vector<std::size_t>& table() const { return table_; }
  std::size_t operator()(std::size_t x) const { return table_.at(x); }

  PointSet image(PointSet a) const {
    PointSet out;
    for (std::size_t x : a.points()) out = out.with(table_[x]);
    return out;
  }

  PointSet preimage(PointSet b) const {
    PointSet out;
    for (std::size_t x = 0; x < table_.size(); ++x) {
      if (b.contains(table_[x])) out = out.with(x);
    }
    return out;
  }

  bool is_injective() const { return image(domain_.space().full()).size() == table_.size(); }
  bool is_surjective() const { return image(domain_.space().full()) == codomain_.space().full(); }
  bool is_bijective() const { return is_injective() && is_surjective(); }

  /// The inverse map, with the roles of the two operations swapped.
  SpaceMap inverse() const {
    if (!is_bijective()) throw Error(ErrorCode::PreconditionViolated, "only a bijection has an inverse");
    std::vector<std::size_t> inv(table_.size());
    for (std::size_t x = 0; x < table_.size(); ++x) inv[table_[x]] = x;
    return SpaceMap(codomain_, domain_, std::move(inv));
  }

 private:
  GammaContext domain_;
  GammaContext codomain_;
  std::vector<std::size_t> table_;
};

/// For each x and open V ∋ f(x), some open U ∋ x has f(gamma(U)) ⊆ beta(V).
inline bool is_gb_continuous(const SpaceMap& f) {
  const auto dom_opens = f.domain().space().opens();
  const auto dom_images = f.domain().operation().images();
  const auto cod_opens = f.codomain().space().opens();
  const auto cod_images = f.codomain().operation().images();
  for (std::size_t x = 0; x < f.domain().space().size(); ++x) {
    for (std::size_t j = 0; j < cod_opens.size(); ++j) {
      if (!cod_opens[j].contains(f(x))) continue;
      bool found = false;
      for (std::size_t i = 0; i < dom_opens.size() && !found; ++i) {
        found = dom_opens[i].contains(x) && f.image(dom_images[i]).subset_of(cod_images[j]);
      }
      if (!found) return false;
    }
  }
  return true;
}

/// Images of gamma-open sets are beta-open.
inline bool is_gb_open(const SpaceMap& f) {
  for (PointSet a : f.domain().gamma_open_family()) {
    if (!f.codomain().is_gamma_open(f.image(a))) return false;
  }
  return true;
}

/// Images of gamma-closed sets are beta-closed, both under the same variant.
inline bool is_gb_closed(const SpaceMap& f, ClosedVariant variant = ClosedVariant::jankovic) {
  for (PointSet a : f.domain().gamma_closed_family(variant)) {
    if (!f.codomain().is_gamma_closed(f.image(a), variant)) return false;
  }
  return true;
}

inline bool is_gb_homeomorphism(const SpaceMap& f) {
  return f.is_bijective() && is_gb_continuous(f) && is_gb_continuous(f.inverse());
}

/// A set A with f(cl_gamma(A)) ⊄ cl_beta(f(A)), if any.
inline std::optional<PointSet> find_closure_image_violation(const SpaceMap& f) {
  std::optional<PointSet> bad;
  for_each_subset(f.domain().ground(), [&](PointSet a) {
    if (!bad && !f.image(f.domain().closure(a)).subset_of(f.codomain().closure(f.image(a)))) bad = a;
  });
  return bad;
}

/// f(cl_gamma(A)) ⊆ cl_beta(f(A)) for every A; requires f to be (gamma,beta)-continuous.
inline bool closure_image_lemma(const SpaceMap& f) {
  if (!is_gb_continuous(f)) {
    throw Error(ErrorCode::PreconditionViolated, "closure-image lemma needs a (gamma,beta)-continuous map");
  }
  return !find_closure_image_violation(f);
}

enum class MapFilter { all, injective, surjective, bijective };

constexpr std::string_view to_string(MapFilter filter) {
  switch (filter) {
    case MapFilter::all: return "all";
    case MapFilter::injective: return "injective";
    case MapFilter::surjective: return "surjective";
    case MapFilter::bijective: return "bijective";
  }
  return "all";
}

/// Calls fn(table) for every point function {0..m-1} -> {0..k-1} passing the
/// filter, in lexicographic order of the table (point 0 most significant).
template <class Fn>
void for_each_point_function(std::size_t m, std::size_t k, MapFilter filter, Fn&& fn) {
  if (m > kMaxEnumeratedPoints || k > kMaxEnumeratedPoints) {
    throw Error(ErrorCode::SizeTooLarge, "map enumeration supports at most 4 points on each side");
  }
  if (k == 0) return;
  std::vector<std::size_t> table(m, 0);
  while (true) {
    PointSet hit;
    for (std::size_t y : table) hit = hit.with(y);
    const bool injective = hit.size() == m;
    const bool surjective = hit.size() == k;
    const bool keep = filter == MapFilter::all || (filter == MapFilter::injective && injective) ||
                      (filter == MapFilter::surjective && surjective) ||
                      (filter == MapFilter::bijective && injective && surjective);
    if (keep) fn(static_cast<const std::vector<std::size_t>&>(table));
    std::size_t pos = m;
    while (pos > 0 && table[pos - 1] + 1 == k) table[--pos] = 0;
    if (pos == 0) return;
    ++table[pos - 1];
  }
}

inline std::vector<SpaceMap> enumerate_maps(const GammaContext& domain, const GammaContext& codomain,
                                            MapFilter filter = MapFilter::all) {
  std::vector<SpaceMap> maps;
  for_each_point_function(domain.space().size(), codomain.space().size(), filter,
                          [&](const std::vector<std::size_t>& table) { maps.emplace_back(domain, codomain, table); });
  return maps;
}

}  // namespace gammatop
