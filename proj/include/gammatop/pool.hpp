#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gammatop/context.hpp"
#include "gammatop/enumerate.hpp"
#include "gammatop/error.hpp"
#include "gammatop/operation.hpp"

namespace gammatop {

inline constexpr std::uint64_t kDefaultSeed = 12345;
inline constexpr std::size_t kDefaultSamples = 10000;
/// Largest point count for which every expansive operation is scanned.
inline constexpr std::size_t kExhaustivePoolLimit = 3;

enum class PoolKind { exhaustive, builtins, sample };

struct PoolSpec {
  PoolKind kind = PoolKind::exhaustive;
  std::size_t samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
};

/// All (topology, operation) instances on exactly n points, in canonical order:
/// topologies by open family, then operations by pool position.
///
/// Exhaustive pools are only used up to kExhaustivePoolLimit points; beyond
/// that the pool becomes builtins plus seeded samples. A sampled topology
/// whose whole operation set is no larger than the sample budget is scanned
/// exhaustively instead. Instances are addressable by global index so a sweep
/// can be split into contiguous ranges.
class ContextPool {
 public:
  ContextPool(std::size_t n, PoolSpec spec) : n_(n), spec_(spec), topologies_(enumerate_topologies(n)) {
    if (spec_.kind == PoolKind::exhaustive && n_ > kExhaustivePoolLimit) spec_.kind = PoolKind::sample;
    std::uint64_t total = 0;
    for (std::size_t t = 0; t < topologies_.size(); ++t) {
      const FiniteSpace& space = topologies_[t];
      Source src;
      if (spec_.kind != PoolKind::exhaustive) src.builtins = builtin_operations(space);
      const std::uint64_t all = operation_count(space);
      switch (spec_.kind) {
        case PoolKind::exhaustive:
          src.exhaustive = true;
          src.count = all;
          break;
        case PoolKind::builtins:
          src.count = src.builtins.size();
          break;
        case PoolKind::sample:
          if (all <= spec_.samples + src.builtins.size()) {
            src.exhaustive = true;
            src.builtins.clear();
            src.count = all;
          } else {
            src.count = src.builtins.size() + spec_.samples;
          }
          break;
      }
      offsets_.push_back(total);
      total += src.count;
      sources_.push_back(std::move(src));
    }
    total_ = total;
  }

  std::size_t points() const { return n_; }
  std::uint64_t size() const { return total_; }
  const std::vector<FiniteSpace>& topologies() const { return topologies_; }
  const PoolSpec& spec() const { return spec_; }

  /// Number of instances contributed by the t-th topology.
  std::uint64_t count_for(std::size_t t) const { return sources_.at(t).count; }

  std::string describe() const {
    switch (spec_.kind) {
      case PoolKind::exhaustive: return "exhaustive";
      case PoolKind::builtins: return "builtins";
      case PoolKind::sample:
        return "builtins+sample(" + std::to_string(spec_.samples) + ",seed=" + std::to_string(spec_.seed) + ")";
    }
    return "exhaustive";
  }

  GammaContext at(std::uint64_t index) const {
    if (index >= total_) throw Error(ErrorCode::PointOutOfRange, "instance index past the end of the pool");
    const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
    const std::size_t t = static_cast<std::size_t>(it - offsets_.begin()) - 1;
    const std::uint64_t local = index - offsets_[t];
    const FiniteSpace& space = topologies_[t];
    const Source& src = sources_[t];
    if (src.exhaustive) return GammaContext(space, operation_at(space, local));
    if (local < src.builtins.size()) return GammaContext(space, src.builtins[local]);
    return GammaContext(space, sample_operation(space, spec_.seed, t, local - src.builtins.size()));
  }

 private:
  struct Source {
    bool exhaustive = false;
    std::vector<GammaOperation> builtins;
    std::uint64_t count = 0;
  };

  std::size_t n_;
  PoolSpec spec_;
  std::vector<FiniteSpace> topologies_;
  std::vector<Source> sources_;
  std::vector<std::uint64_t> offsets_;
  std::uint64_t total_ = 0;
};

}  // namespace gammatop
