#include <atomic>
#include <cstdlib>
#include <string>

#include "jt/kernels.hpp"

namespace jt::kernels {

#ifdef JT_HAVE_AVX2
const KernelTable& avx2_kernels();
#endif

namespace {

bool cpu_has_avx2() {
#if defined(JT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* pick(Backend backend) {
  const KernelTable* simd = avx2_table();
  switch (backend) {
    case Backend::Scalar:
      return &scalar_table();
    case Backend::Avx2:
    case Backend::Auto:
      return simd != nullptr ? simd : &scalar_table();
  }
  return &scalar_table();
}

Backend backend_from_env() {
  const char* env = std::getenv("JT_KERNELS");
  if (env == nullptr) return Backend::Auto;
  const std::string value(env);
  if (value == "scalar") return Backend::Scalar;
  if (value == "avx2") return Backend::Avx2;
  return Backend::Auto;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{pick(backend_from_env())};
  return table;
}

}  // namespace

const KernelTable* avx2_table() {
#ifdef JT_HAVE_AVX2
  static const bool supported = cpu_has_avx2();
  return supported ? &avx2_kernels() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

std::string_view select_backend(Backend backend) {
  const KernelTable* table = pick(backend);
  current().store(table, std::memory_order_relaxed);
  return table->name;
}

}  // namespace jt::kernels
