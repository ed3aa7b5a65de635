#pragma once

#include <cstddef>
#include <span>

namespace cdlab {

// Pairwise (tree) summation with a fixed split, so results do not depend on
// how callers chunk work.
template <typename T>
T pairwise_sum(std::span<const T> values) {
  constexpr std::size_t leaf = 16;
  if (values.size() <= leaf) {
    T acc{};
    for (const T& v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace cdlab
