#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gammatop/gammatop.hpp"
#include "oracle.hpp"

namespace testing_support {

using gammatop::PointSet;

/// Set from a string of single-letter labels: "ac" -> {a, c}.
inline PointSet S(std::string_view letters) {
  PointSet out;
  for (char c : letters) out = out.with(static_cast<std::size_t>(c - 'a'));
  return out;
}

inline std::vector<PointSet> F(std::initializer_list<std::string_view> sets) {
  std::vector<PointSet> out;
  for (auto s : sets) out.push_back(S(s));
  std::sort(out.begin(), out.end(), gammatop::CanonicalLess{});
  return out;
}

inline std::vector<PointSet> to_vector(std::span<const PointSet> s) { return {s.begin(), s.end()}; }

inline oracle::Model to_model(const gammatop::GammaContext& ctx) {
  oracle::Model m;
  m.n = ctx.space().size();
  const auto opens = ctx.space().opens();
  for (std::size_t i = 0; i < opens.size(); ++i) {
    m.opens.push_back(opens[i].mask());
    m.images.push_back(ctx.operation().image(i).mask());
  }
  return m;
}

inline gammatop::GammaContext with_op(const gammatop::FiniteSpace& space, gammatop::OperationKind kind,
                                      std::size_t pivot = 0) {
  return gammatop::GammaContext(space, gammatop::make_operation(space, gammatop::OperationTag{kind, pivot}));
}

/// Every context on n points with every expansive operation.
template <class Fn>
void for_each_exhaustive_context(std::size_t n, Fn&& fn) {
  for (const auto& space : gammatop::enumerate_topologies(n)) {
    const std::uint64_t count = gammatop::operation_count(space);
    for (std::uint64_t i = 0; i < count; ++i) fn(gammatop::GammaContext(space, gammatop::operation_at(space, i)));
  }
}

}  // namespace testing_support

namespace testing_support {

/// The error code thrown by fn, or nullopt if it returns normally.
template <class Fn>
std::optional<gammatop::ErrorCode> thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const gammatop::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace testing_support
