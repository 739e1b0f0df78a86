#pragma once

#include <vector>

#include "ics/poset.hpp"

// A 20-element poset with a rich region structure: its reference
// interval-closed set {5,8,9,10,11,16} (1-based labels) exercises every
// region at once, with nonempty floor, ceiling, incomparables, and a max
// antichain spread over two components of the induced diagram.
namespace fixture {

inline ics::Poset worked_example() {
    // 1-based cover pairs, converted to 0-based indices below.
    static const std::vector<std::pair<int, int>> covers1 = {
        {1, 2},  {2, 7},   {7, 12},  {12, 18}, {7, 13},  {13, 19}, {7, 14},  {14, 20},
        {2, 8},  {8, 14},  {14, 19}, {8, 15},  {15, 20}, {1, 3},   {3, 9},   {9, 16},
        {16, 20}, {1, 4},  {4, 10},  {10, 17}, {17, 20}, {1, 5},   {5, 10},  {10, 16},
        {5, 9},  {9, 15},  {10, 15}, {13, 20}, {11, 16}, {6, 11}};
    std::vector<std::pair<int, int>> covers;
    covers.reserve(covers1.size());
    for (auto [a, b] : covers1) covers.emplace_back(a - 1, b - 1);
    return ics::Poset::from_covers(20, std::move(covers));
}

// Subset from 1-based element numbers.
inline ics::Subset labeled(const ics::Poset& p, const std::vector<int>& xs1) {
    ics::Subset s = p.empty_subset();
    for (int x : xs1) s.set(x - 1);
    return s;
}

} // namespace fixture
