#pragma once

#include <cstddef>
#include <functional>

namespace permlab {

/// Runs task(0), ..., task(count - 1), in any order and on any threads, and returns when all
/// have finished. Tasks write only to their own output slot, so merge order is fixed by index.
/// The library never spawns threads itself; callers that want parallelism supply one.
using Executor = std::function<void(std::size_t count, const std::function<void(std::size_t)>& task)>;

inline void run_tasks(const Executor& executor, std::size_t count,
                      const std::function<void(std::size_t)>& task) {
  if (executor) {
    executor(count, task);
    return;
  }
  for (std::size_t i = 0; i < count; ++i) task(i);
}

}  // namespace permlab
