#include "commgraph/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace commgraph {

std::size_t thread_count() {
  if (const char* env = std::getenv("COMMGRAPH_THREADS"); env && *env) {
    try {
      auto n = std::stoul(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  auto hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void run_workers(std::size_t workers, const std::function<void(std::size_t, std::size_t)>& body) {
  if (workers <= 1) {
    body(0, 1);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        body(w, workers);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace commgraph
