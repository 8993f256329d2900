#include "icosian/parallel.hpp"

#include <atomic>
#include <cstdlib>

namespace icosian {

namespace {

std::atomic<unsigned> g_override{0};

unsigned default_threads() {
  if (const char *env = std::getenv("ICOSIAN_THREADS")) {
    char *end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && n > 0)
      return static_cast<unsigned>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

} // namespace

unsigned thread_count() {
  unsigned o = g_override.load();
  if (o != 0)
    return o;
  static const unsigned d = default_threads();
  return d;
}

void set_thread_count(unsigned n) { g_override.store(n); }

} // namespace icosian
