#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Data-parallel inner loops. Every kernel has a portable scalar reference and
// an optional AVX2 variant; the table in use is chosen once at startup from
// the CPU's capabilities (override with GENLOUVAIN_KERNELS=scalar).
//
// The gain kernels evaluate the same expression tree lane by lane, so scalar
// and vector results are bit-identical (the library builds with
// -ffp-contract=off). The row-sum kernel reassociates its accumulation and is
// only equivalent up to rounding.

namespace genlouvain::kernels {

/// Per-pair term of a relational row sum for row i:
///   same community:  same_const + same_w * w_ij + same_v * v_j
///   otherwise:       other_const + other_w * w_ij + other_v * v_j
struct RowTerms {
  double same_const = 0.0;
  double same_w = 0.0;
  double same_v = 0.0;
  double other_const = 0.0;
  double other_w = 0.0;
  double other_v = 0.0;
};

/// Coefficients of an affine gain
///   g(C) = ((dw * dw_C + tot * tot_C) + size * size_C) + aux * aux_C
struct GainTerms {
  double dw = 0.0;
  double tot = 0.0;
  double size = 0.0;
  double aux = 0.0;
};

struct KernelTable {
  std::string_view name;
  double (*masked_affine_row_sum)(const RowTerms& terms, const double* w, const double* v,
                                  const std::uint32_t* labels, std::uint32_t label, std::size_t n);
  void (*linear_gains)(const GainTerms& terms, const double* dw, const double* tot,
                       const double* size, const double* aux, double* out, std::size_t n);
  std::size_t (*first_argmax)(const double* values, std::size_t n);
};

const KernelTable& scalar_table() noexcept;
/// nullptr when the build or the CPU lacks AVX2.
const KernelTable* avx2_table() noexcept;
const KernelTable& active_table() noexcept;

inline double masked_affine_row_sum(const RowTerms& terms, std::span<const double> w,
                                    std::span<const double> v, std::span<const std::uint32_t> labels,
                                    std::uint32_t label) {
  return active_table().masked_affine_row_sum(terms, w.data(), v.data(), labels.data(), label,
                                              w.size());
}

inline void linear_gains(const GainTerms& terms, std::span<const double> dw,
                         std::span<const double> tot, std::span<const double> size,
                         std::span<const double> aux, std::span<double> out) {
  active_table().linear_gains(terms, dw.data(), tot.data(), size.data(), aux.data(), out.data(),
                              dw.size());
}

/// Index of the first maximal element; 0 for an empty range.
inline std::size_t first_argmax(std::span<const double> values) {
  return active_table().first_argmax(values.data(), values.size());
}

/// The scalar evaluation of one affine gain, shared with the criteria so the
/// batched and single-candidate paths agree exactly.
inline double linear_gain(const GainTerms& t, double dw, double tot, double size, double aux) {
  return ((t.dw * dw + t.tot * tot) + t.size * size) + t.aux * aux;
}

}  // namespace genlouvain::kernels
