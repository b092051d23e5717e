#ifndef GAUSSEP_DETAIL_PARALLEL_HPP
#define GAUSSEP_DETAIL_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace gaussep::detail {

inline unsigned resolve_threads(unsigned requested, std::size_t work) {
  unsigned t = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(work, 1)));
}

// Calls body(begin, end, chunk) over contiguous chunks of [0, count), one
// chunk per worker. The first exception thrown by any worker is rethrown.
template <typename Body>
void parallel_chunks(std::size_t count, unsigned threads, Body&& body) {
  const unsigned workers = resolve_threads(threads, count);
  if (workers <= 1) {
    body(std::size_t{0}, count, 0u);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t per = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(count, w * per);
    const std::size_t end = std::min(count, begin + per);
    pool.emplace_back([&, begin, end, w] {
      try {
        body(begin, end, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace gaussep::detail

#endif  // GAUSSEP_DETAIL_PARALLEL_HPP
