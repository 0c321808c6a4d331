#include <cstdlib>
#include <string_view>

#include "genlouvain/kernels.hpp"

namespace genlouvain::kernels {

#if !GENLOUVAIN_HAVE_AVX2
const KernelTable* avx2_table() noexcept { return nullptr; }
#endif

const KernelTable& active_table() noexcept {
  static const KernelTable& table = [] () -> const KernelTable& {
    const char* forced = std::getenv("GENLOUVAIN_KERNELS");
    if (forced != nullptr && std::string_view(forced) == "scalar") return scalar_table();
    if (const KernelTable* avx2 = avx2_table()) return *avx2;
    return scalar_table();
  }();
  return table;
}

}  // namespace genlouvain::kernels
