#include "thread_executor.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace permlab::tools {

Executor make_thread_executor(unsigned threads) {
  if (threads <= 1) return {};
  return [threads](std::size_t count, const std::function<void(std::size_t)>& task) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    };
    {
      std::vector<std::jthread> pool;
      const auto workers = std::min<std::size_t>(threads, count);
      for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
      worker();
    }
    if (failure) std::rethrow_exception(failure);
  };
}

}  // namespace permlab::tools
