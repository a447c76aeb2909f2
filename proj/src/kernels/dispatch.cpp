#include <atomic>
#include <cstdlib>
#include <string>

#include "edgerake/error.hpp"
#include "edgerake/kernels.hpp"

namespace edgerake::kernels {

std::string_view name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return avx2_table() != nullptr && __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon: return neon_table() != nullptr;
  }
  return false;
}

const KernelTable& table(Isa isa) {
  if (!supported(isa))
    throw InvalidInput("SIMD variant '" + std::string(name(isa)) + "' is not available");
  switch (isa) {
    case Isa::Avx2: return *avx2_table();
    case Isa::Neon: return *neon_table();
    default: return scalar_table();
  }
}

namespace {

const KernelTable* detect() {
  if (const char* env = std::getenv("EDGERAKE_SIMD")) {
    const std::string_view v(env);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon})
      if (v == name(isa)) return &table(isa);
    throw InvalidInput("EDGERAKE_SIMD must be scalar, avx2 or neon");
  }
  for (Isa isa : {Isa::Avx2, Isa::Neon})
    if (supported(isa)) return &table(isa);
  return &scalar_table();
}

std::atomic<const KernelTable*> g_active{nullptr};

}  // namespace

const KernelTable& active() {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (t == nullptr) {
    t = detect();
    g_active.store(t, std::memory_order_release);
  }
  return *t;
}

void select(Isa isa) { g_active.store(&table(isa), std::memory_order_release); }

}  // namespace edgerake::kernels
