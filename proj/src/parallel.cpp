#include "qcorr/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace qcorr {

std::size_t worker_count() {
  std::size_t n = std::thread::hardware_concurrency();
  if (n == 0) {
    n = 1;
  }
  if (const char* env = std::getenv("QCORR_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0 && static_cast<std::size_t>(v) < n) {
        n = static_cast<std::size_t>(v);
      }
    } catch (const std::exception&) {
      // unparsable value: keep the hardware default
    }
  }
  return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min(worker_count(), n == 0 ? std::size_t{1} : n);
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) {
      body(i);
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
          body(i);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
}

}  // namespace qcorr
