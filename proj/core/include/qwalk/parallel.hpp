#pragma once

#include <cstddef>
#include <functional>

namespace qwalk {

/// Worker threads to use: QWALK_THREADS when set to a positive integer,
/// otherwise std::thread::hardware_concurrency() (at least 1).
std::size_t worker_count();

/// Calls body(i) for every i in [0, n). Each index is visited exactly once;
/// bodies must only write to per-index storage.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace qwalk
