#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "covstream/bitops.hpp"

namespace covstream::bitops {

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

const Kernels* pick_auto() {
  if (const char* env = std::getenv("COVSTREAM_FORCE_SCALAR"); env && env[0] == '1')
    return &scalar();
  if (const Kernels* k = avx2_or_null()) return k;
  return &scalar();
}

std::atomic<const Kernels*> g_active{nullptr};

}  // namespace

const Kernels& active() {
  const Kernels* k = g_active.load(std::memory_order_acquire);
  if (!k) {
    k = pick_auto();
    g_active.store(k, std::memory_order_release);
  }
  return *k;
}

void force_backend(std::string_view name) {
  if (name == "scalar") {
    g_active.store(&scalar(), std::memory_order_release);
  } else if (name == "avx2") {
    const Kernels* k = avx2_or_null();
    if (!k) throw std::runtime_error("avx2 backend requested but not available on this CPU");
    g_active.store(k, std::memory_order_release);
  } else if (name == "auto") {
    g_active.store(pick_auto(), std::memory_order_release);
  } else {
    throw std::runtime_error("unknown bitops backend: " + std::string(name));
  }
}

}  // namespace covstream::bitops
