#pragma once

#include <cstddef>
#include <functional>

namespace lvswitch {

/// Worker count for sweeps: hardware concurrency, capped by the
/// LVSWITCH_THREADS environment variable when set.
unsigned thread_cap() noexcept;

/// Runs f(i) for i in [0, n). Results must be written to per-index slots;
/// assembly is deterministic regardless of scheduling. Exceptions from f are
/// rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace lvswitch
