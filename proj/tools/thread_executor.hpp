#pragma once

#include "permlab/executor.hpp"

namespace permlab::tools {

/// An executor that runs tasks on up to `threads` workers pulling indices from a shared
/// counter. With threads <= 1 it returns an empty executor, so tasks run inline.
Executor make_thread_executor(unsigned threads);

}  // namespace permlab::tools
