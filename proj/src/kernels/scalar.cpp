#include "staircase/kernels.hpp"

namespace staircase::kernels::scalar {

void eval_batch(const FormTerms& form, const std::int32_t* soa, std::size_t stride,
                std::size_t count, std::int32_t* out) {
  for (std::size_t k = 0; k < count; ++k) {
    std::int32_t acc = 0;
    for (int v = 0; v < form.n; ++v) {
      const std::int32_t xv = soa[static_cast<std::size_t>(v) * stride + k];
      std::int32_t t = xv;
      for (std::int32_t e = form.row_begin[v]; e < form.row_begin[v + 1]; ++e) {
        t += form.coefficient[e] * soa[static_cast<std::size_t>(form.column[e]) * stride + k];
      }
      acc += xv * t;
    }
    out[k] = acc;
  }
}

void polar_apply(const PolarMatrix& p, const std::int32_t* x, std::int32_t* out) {
  for (int v = 0; v < p.n; ++v) {
    const std::int32_t* row = p.entries.data() + static_cast<std::size_t>(v) * p.stride;
    std::int32_t acc = 0;
    for (int u = 0; u < p.n; ++u) acc += row[u] * x[u];
    out[v] = acc;
  }
}

}  // namespace staircase::kernels::scalar
