#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "staircase/kernels.hpp"

namespace staircase::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(STAIRCASE_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

// STAIRCASE_ISA=scalar pins the reference kernels, e.g. for benchmarking.
Isa initial_isa() {
  const char* forced = std::getenv("STAIRCASE_ISA");
  if (forced && std::strcmp(forced, "scalar") == 0) return Isa::Scalar;
  return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) { return isa == Isa::Scalar || cpu_has_avx2(); }

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) throw std::runtime_error(std::string("ISA not available: ") + isa_name(isa));
  current().store(isa, std::memory_order_relaxed);
}

void eval_batch(const FormTerms& form, const std::int32_t* soa, std::size_t stride,
                std::size_t count, std::int32_t* out) {
#if defined(STAIRCASE_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return avx2::eval_batch(form, soa, stride, count, out);
#endif
  scalar::eval_batch(form, soa, stride, count, out);
}

void polar_apply(const PolarMatrix& p, const std::int32_t* x, std::int32_t* out) {
#if defined(STAIRCASE_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return avx2::polar_apply(p, x, out);
#endif
  scalar::polar_apply(p, x, out);
}

}  // namespace staircase::kernels
