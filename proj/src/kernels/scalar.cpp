#include "genlouvain/kernels.hpp"

namespace genlouvain::kernels {

namespace {

double row_sum(const RowTerms& t, const double* w, const double* v, const std::uint32_t* labels,
               std::uint32_t label, std::size_t n) {
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (labels[j] == label) {
      acc += (t.same_const + t.same_w * w[j]) + t.same_v * v[j];
    } else {
      acc += (t.other_const + t.other_w * w[j]) + t.other_v * v[j];
    }
  }
  return acc;
}

void gains(const GainTerms& t, const double* dw, const double* tot, const double* size,
           const double* aux, double* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] = linear_gain(t, dw[k], tot[k], size[k], aux[k]);
}

std::size_t argmax(const double* values, std::size_t n) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < n; ++k) {
    if (values[k] > values[best]) best = k;
  }
  return best;
}

constexpr KernelTable kScalar{"scalar", &row_sum, &gains, &argmax};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace genlouvain::kernels
