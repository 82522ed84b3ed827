#pragma once

// Data-parallel inner loops of the quadratic-form engine. Each kernel has a
// portable scalar reference and an AVX2 variant; the variant is chosen once
// at runtime from CPUID and can be overridden (tests compare the two).

#include <cstddef>
#include <cstdint>
#include <vector>

namespace staircase::kernels {

// Upper-triangular term list of a unit form q(x) = Σ x_v² + Σ_{u<v} c_uv x_u x_v.
// Row v holds the pairs (u, c_vu) with u > v.
struct FormTerms {
  int n = 0;
  std::vector<std::int32_t> row_begin;  // size n + 1
  std::vector<std::int32_t> column;
  std::vector<std::int32_t> coefficient;
};

// Dense symmetric polarization matrix P = 2G (P_vv = 2, P_uv = c_uv), row-major
// with rows padded to `stride` (a multiple of 8) and zero padding.
struct PolarMatrix {
  int n = 0;
  int stride = 0;
  std::vector<std::int32_t> entries;
};

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa);
bool isa_supported(Isa isa);
Isa active_isa();
// Force a variant; throws std::runtime_error if the CPU lacks it.
void set_active_isa(Isa isa);

// out[k] = q(x_k) for k < count, with x_k[v] = soa[v * stride + k].
void eval_batch(const FormTerms& form, const std::int32_t* soa, std::size_t stride,
                std::size_t count, std::int32_t* out);

// out[v] = Σ_u P_vu x_u, i.e. out[v] = b(x, e_v). x and out have P.stride slots.
void polar_apply(const PolarMatrix& p, const std::int32_t* x, std::int32_t* out);

namespace scalar {
void eval_batch(const FormTerms& form, const std::int32_t* soa, std::size_t stride,
                std::size_t count, std::int32_t* out);
void polar_apply(const PolarMatrix& p, const std::int32_t* x, std::int32_t* out);
}  // namespace scalar

namespace avx2 {
void eval_batch(const FormTerms& form, const std::int32_t* soa, std::size_t stride,
                std::size_t count, std::int32_t* out);
void polar_apply(const PolarMatrix& p, const std::int32_t* x, std::int32_t* out);
}  // namespace avx2

}  // namespace staircase::kernels
