#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "coxstab/element.hpp"

namespace coxstab {

/// Streams every element of the finite group exactly once, in ShortLex order
/// (by length, then lexicographic reduced word), as breadth-first closure of
/// {identity} under right multiplication. The span handed to the visitor is
/// the element's root permutation and is only valid during the call.
/// Throws CapExceededError (carrying the partial count) once more than `cap`
/// elements have been found. Returns the group order.
std::uint64_t for_each_element(
    const RootSystem& rs, std::uint64_t cap,
    const std::function<void(std::span<const std::uint16_t>)>& visit);

/// Materialized variant of for_each_element, same order and cap behavior.
std::vector<GroupElement> enumerate_group(const RootSystem& rs,
                                          std::uint64_t cap);

}  // namespace coxstab
