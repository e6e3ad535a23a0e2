// Copyright 2026 The evcopula Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EVCOPULA_DETAIL_PARALLEL_HPP_
#define EVCOPULA_DETAIL_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace evc::detail {

// Splits [0, count) into contiguous blocks, one per worker, and calls
// body(worker, begin, end) for each. The first exception thrown by any
// worker is rethrown on the calling thread.
template <typename Body>
void ParallelBlocks(std::size_t count, int workers, Body&& body) {
  const std::size_t n_workers = static_cast<std::size_t>(
      std::clamp<long>(workers, 1, static_cast<long>(std::max<std::size_t>(count, 1))));
  if (n_workers == 1) {
    body(std::size_t{0}, std::size_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(n_workers);
  std::vector<std::jthread> threads;
  threads.reserve(n_workers);
  const std::size_t block = (count + n_workers - 1) / n_workers;
  for (std::size_t w = 0; w < n_workers; ++w) {
    const std::size_t begin = std::min(count, w * block);
    const std::size_t end = std::min(count, begin + block);
    threads.emplace_back([&, w, begin, end] {
      try {
        body(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  threads.clear();
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

}  // namespace evc::detail

#endif  // EVCOPULA_DETAIL_PARALLEL_HPP_
