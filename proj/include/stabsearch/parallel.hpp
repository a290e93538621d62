// Copyright 2026 The stabsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace stabsearch::detail {

/// Worker count: STABSEARCH_THREADS if set, else the hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("STABSEARCH_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) {
      return static_cast<unsigned>(v);
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Splits [0, n) into chunks of `chunk` items and evaluates fn(begin, end)
/// for each, possibly concurrently. Results come back in chunk order.
template <class T, class Fn>
std::vector<T> chunked_map(std::size_t n, std::size_t chunk, Fn fn) {
  const std::size_t n_chunks = (n + chunk - 1) / chunk;
  std::vector<T> out(n_chunks);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(worker_count(), n_chunks));
  if (workers <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) {
      out[c] = fn(c * chunk, std::min(n, (c + 1) * chunk));
    }
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n_chunks);
  auto work = [&] {
    for (std::size_t c = next++; c < n_chunks; c = next++) {
      try {
        out[c] = fn(c * chunk, std::min(n, (c + 1) * chunk));
      } catch (...) {
        errors[c] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) {
      pool.emplace_back(work);
    }
    work();
  }
  for (auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return out;
}

}  // namespace stabsearch::detail
