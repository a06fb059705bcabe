#include <cstdlib>
#include <string_view>

#include "superjam/kernels.hpp"

namespace superjam::kernels {

#ifdef SUPERJAM_HAVE_AVX2
const KernelTable& avx2_kernels() noexcept;
#endif

const KernelTable* kernels_for(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return &scalar_kernels();
    case Isa::avx2:
#ifdef SUPERJAM_HAVE_AVX2
      if (__builtin_cpu_supports("avx2")) return &avx2_kernels();
#endif
      return nullptr;
  }
  return nullptr;
}

namespace {

const KernelTable& select() noexcept {
  if (const char* forced = std::getenv("SUPERJAM_KERNELS");
      forced != nullptr && std::string_view(forced) == "scalar") {
    return scalar_kernels();
  }
  if (const KernelTable* t = kernels_for(Isa::avx2)) return *t;
  return scalar_kernels();
}

}  // namespace

const KernelTable& active() noexcept {
  static const KernelTable& table = select();
  return table;
}

}  // namespace superjam::kernels
