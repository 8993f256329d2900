#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "icosian/errors.hpp"

namespace icosian {

/// Worker count for closure computations. Defaults to the ICOSIAN_THREADS
/// environment variable, else the hardware concurrency.
unsigned thread_count();

/// Overrides the worker count for this process; 0 restores the default.
void set_thread_count(unsigned n);

/// Breadth-first closure of `seeds` under `step`, which appends the images of
/// one element to an output vector. Each frontier is expanded in parallel and
/// merged in frontier order, and the result is sorted with `less`, so the
/// output does not depend on the worker count.
template <class T, class Hash, class Less, class Step>
std::vector<T> closure_of(const std::vector<T> &seeds, Step step,
                          std::size_t cap, Less less,
                          const std::string &what = "closure") {
  std::unordered_set<T, Hash> seen;
  std::vector<T> frontier;
  for (const auto &s : seeds)
    if (seen.insert(s).second)
      frontier.push_back(s);
  if (seen.size() > cap)
    throw CapExceeded(what + " exceeded " + std::to_string(cap));

  const unsigned workers = std::max(1u, thread_count());
  while (!frontier.empty()) {
    const std::size_t chunks =
        std::min<std::size_t>(workers, frontier.size());
    std::vector<std::vector<T>> images(chunks);
    std::vector<std::exception_ptr> errors(chunks);
    auto expand = [&](std::size_t chunk) {
      try {
        std::size_t lo = frontier.size() * chunk / chunks;
        std::size_t hi = frontier.size() * (chunk + 1) / chunks;
        for (std::size_t i = lo; i < hi; ++i)
          step(frontier[i], images[chunk]);
      } catch (...) {
        errors[chunk] = std::current_exception();
      }
    };
    if (chunks == 1) {
      expand(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t c = 1; c < chunks; ++c)
        pool.emplace_back(expand, c);
      expand(0);
      for (auto &t : pool)
        t.join();
    }
    for (const auto &e : errors)
      if (e)
        std::rethrow_exception(e);
    std::vector<T> next;
    for (auto &chunk : images) {
      for (auto &x : chunk) {
        if (seen.insert(x).second) {
          if (seen.size() > cap)
            throw CapExceeded(what + " exceeded " + std::to_string(cap));
          next.push_back(std::move(x));
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<T> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), less);
  return out;
}

/// Applies `fn` to every index in [0, n) across the worker pool. `fn` must only
/// write to per-index state.
template <class Fn> void parallel_for(std::size_t n, Fn fn) {
  const std::size_t chunks =
      std::min<std::size_t>(std::max(1u, thread_count()), n);
  if (chunks <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(chunks);
  auto run = [&](std::size_t chunk) {
    try {
      for (std::size_t i = n * chunk / chunks; i < n * (chunk + 1) / chunks;
           ++i)
        fn(i);
    } catch (...) {
      errors[chunk] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t c = 1; c < chunks; ++c)
    pool.emplace_back(run, c);
  run(0);
  for (auto &t : pool)
    t.join();
  for (const auto &e : errors)
    if (e)
      std::rethrow_exception(e);
}

} // namespace icosian
