#include "genlouvain/kernels.hpp"

#include <immintrin.h>

#include <algorithm>

namespace genlouvain::kernels {

namespace {

inline double horizontal_sum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

double row_sum(const RowTerms& t, const double* w, const double* v, const std::uint32_t* labels,
               std::uint32_t label, std::size_t n) {
  const __m256d same_c = _mm256_set1_pd(t.same_const);
  const __m256d same_w = _mm256_set1_pd(t.same_w);
  const __m256d same_v = _mm256_set1_pd(t.same_v);
  const __m256d other_c = _mm256_set1_pd(t.other_const);
  const __m256d other_w = _mm256_set1_pd(t.other_w);
  const __m256d other_v = _mm256_set1_pd(t.other_v);
  const __m256i target = _mm256_set1_epi64x(static_cast<long long>(label));

  __m256d acc = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d wj = _mm256_loadu_pd(w + j);
    const __m256d vj = _mm256_loadu_pd(v + j);
    const __m128i lab = _mm_loadu_si128(reinterpret_cast<const __m128i*>(labels + j));
    const __m256d mask = _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_cvtepu32_epi64(lab), target));
    const __m256d in = _mm256_add_pd(_mm256_add_pd(same_c, _mm256_mul_pd(same_w, wj)),
                                     _mm256_mul_pd(same_v, vj));
    const __m256d out = _mm256_add_pd(_mm256_add_pd(other_c, _mm256_mul_pd(other_w, wj)),
                                      _mm256_mul_pd(other_v, vj));
    acc = _mm256_add_pd(acc, _mm256_blendv_pd(out, in, mask));
  }
  double tail = 0.0;
  for (; j < n; ++j) {
    if (labels[j] == label) {
      tail += (t.same_const + t.same_w * w[j]) + t.same_v * v[j];
    } else {
      tail += (t.other_const + t.other_w * w[j]) + t.other_v * v[j];
    }
  }
  return horizontal_sum(acc) + tail;
}

void gains(const GainTerms& t, const double* dw, const double* tot, const double* size,
           const double* aux, double* out, std::size_t n) {
  const __m256d k_dw = _mm256_set1_pd(t.dw);
  const __m256d k_tot = _mm256_set1_pd(t.tot);
  const __m256d k_size = _mm256_set1_pd(t.size);
  const __m256d k_aux = _mm256_set1_pd(t.aux);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d g = _mm256_add_pd(_mm256_mul_pd(k_dw, _mm256_loadu_pd(dw + k)),
                              _mm256_mul_pd(k_tot, _mm256_loadu_pd(tot + k)));
    g = _mm256_add_pd(g, _mm256_mul_pd(k_size, _mm256_loadu_pd(size + k)));
    g = _mm256_add_pd(g, _mm256_mul_pd(k_aux, _mm256_loadu_pd(aux + k)));
    _mm256_storeu_pd(out + k, g);
  }
  for (; k < n; ++k) out[k] = linear_gain(t, dw[k], tot[k], size[k], aux[k]);
}

std::size_t argmax(const double* values, std::size_t n) {
  if (n < 8) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < n; ++k) {
      if (values[k] > values[best]) best = k;
    }
    return best;
  }
  __m256d hi = _mm256_loadu_pd(values);
  std::size_t k = 4;
  for (; k + 4 <= n; k += 4) hi = _mm256_max_pd(hi, _mm256_loadu_pd(values + k));
  __m128d m = _mm_max_pd(_mm256_castpd256_pd128(hi), _mm256_extractf128_pd(hi, 1));
  double best = std::max(_mm_cvtsd_f64(m), _mm_cvtsd_f64(_mm_unpackhi_pd(m, m)));
  for (; k < n; ++k) best = std::max(best, values[k]);

  const __m256d target = _mm256_set1_pd(best);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const int bits = _mm256_movemask_pd(_mm256_cmp_pd(_mm256_loadu_pd(values + j), target, _CMP_EQ_OQ));
    if (bits != 0) return j + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(bits)));
  }
  for (; j < n; ++j) {
    if (values[j] == best) return j;
  }
  return 0;
}

constexpr KernelTable kAvx2{"avx2", &row_sum, &gains, &argmax};

}  // namespace

const KernelTable* avx2_table() noexcept {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
}

}  // namespace genlouvain::kernels
