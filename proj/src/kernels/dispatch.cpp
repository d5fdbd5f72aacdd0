#include "wayex/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace wayex::kern {

const Ops* avx2_ops_impl();  // defined in kernels_avx2.cpp

const Ops* avx2_ops() {
#if defined(__x86_64__)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return avx2_ops_impl();
  }
#endif
  return nullptr;
}

namespace {

const Ops* resolve(std::string_view name) {
  if (name == "scalar") return &scalar_ops();
  if (name == "avx2") {
    const Ops* ops = avx2_ops();
    if (!ops) throw std::runtime_error("avx2 kernels unavailable on this CPU");
    return ops;
  }
  if (name == "auto") {
    const Ops* ops = avx2_ops();
    return ops ? ops : &scalar_ops();
  }
  throw std::runtime_error("unknown kernel backend '" + std::string(name) +
                           "' (expected scalar, avx2, or auto)");
}

const Ops*& active_slot() {
  static const Ops* slot = [] {
    const char* env = std::getenv("WAYEX_KERNELS");
    return resolve(env ? env : "auto");
  }();
  return slot;
}

}  // namespace

const Ops& active() { return *active_slot(); }

void select_backend(std::string_view name) { active_slot() = resolve(name); }

}  // namespace wayex::kern
