#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace pdg {

// Worker count for parallel regions. All reductions use fixed summation
// trees, so results never depend on this setting.
void set_thread_count(int n);
int thread_count();

// Applies fn to contiguous chunks [begin, end) covering [0, n).
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& fn);

// Pairwise summation with a fixed split tree.
double pairwise_sum(std::span<const double> v);

}  // namespace pdg
