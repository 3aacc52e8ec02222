#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace sta::fields {

/// Number of worker threads used by parallel_for. Defaults to the hardware
/// concurrency; results never depend on it.
void set_worker_count(unsigned workers);
unsigned worker_count();

/// Splits [0, n) into contiguous chunks and runs body(begin, end) on each.
/// Chunks never overlap, so bodies may write disjoint output ranges freely.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

/// Pairwise (tree) sum in a fixed order, independent of worker count.
double pairwise_sum(std::span<const double> values);

/// Correctly rounded sum of a short list of terms; the result does not
/// depend on the order of the terms.
double exact_sum(std::span<const double> values);

}  // namespace sta::fields
