#include <stdexcept>
#include <string>

#include "chshlab/kernels.hpp"
#include "variants.hpp"

namespace chshlab::kernels {

namespace {

constexpr KernelTable kScalar{Isa::scalar, detail::rotate_rows_scalar, detail::signed_chsh_scalar,
                              detail::mix_scalar};
#if defined(CHSHLAB_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::avx2, detail::rotate_rows_avx2, detail::signed_chsh_avx2,
                            detail::mix_avx2};
#endif
#if defined(CHSHLAB_HAVE_NEON)
constexpr KernelTable kNeon{Isa::neon, detail::rotate_rows_neon, detail::signed_chsh_neon,
                            detail::mix_neon};
#endif

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(CHSHLAB_HAVE_AVX2)
      __builtin_cpu_init();
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(CHSHLAB_HAVE_NEON)
      return true;  // baseline on AArch64
#else
      return false;
#endif
  }
  return false;
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
    if (cpu_supports(isa)) out.push_back(isa);
  }
  return out;
}

const KernelTable& kernels_for(Isa isa) {
  if (!cpu_supports(isa)) {
    throw std::invalid_argument("kernel variant not available: " + std::string(to_string(isa)));
  }
  switch (isa) {
#if defined(CHSHLAB_HAVE_AVX2)
    case Isa::avx2:
      return kAvx2;
#endif
#if defined(CHSHLAB_HAVE_NEON)
    case Isa::neon:
      return kNeon;
#endif
    default:
      return kScalar;
  }
}

const KernelTable& active() {
  static const KernelTable& table = kernels_for(available_isas().back());
  return table;
}

void rotate_rows(std::span<double> x, std::span<double> y, double c, double s) {
  if (x.size() != y.size()) throw std::invalid_argument("rotate_rows: length mismatch");
  active().rotate_rows(x.data(), y.data(), x.size(), c, s);
}

}  // namespace chshlab::kernels
