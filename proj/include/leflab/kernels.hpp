#pragma once

#include <cstddef>
#include <cstdint>

namespace leflab::kernels {

// y[i] <- (y[i] + a*x[i]) mod p.  Requires an odd prime p < 2^31 and all
// inputs already reduced into [0, p).  This is the inner loop of every
// prime-field elimination in the library.
using ModpAxpyFn = void (*)(std::uint32_t* y, const std::uint32_t* x,
                            std::uint32_t a, std::size_t n, std::uint32_t p);

void modp_axpy_scalar(std::uint32_t* y, const std::uint32_t* x,
                      std::uint32_t a, std::size_t n, std::uint32_t p);

#if defined(__x86_64__) || defined(_M_X64)
void modp_axpy_avx2(std::uint32_t* y, const std::uint32_t* x,
                    std::uint32_t a, std::size_t n, std::uint32_t p);
#endif

// Variant selected once at startup from CPU features.
ModpAxpyFn selected_modp_axpy();

inline void modp_axpy(std::uint32_t* y, const std::uint32_t* x,
                      std::uint32_t a, std::size_t n, std::uint32_t p) {
  selected_modp_axpy()(y, x, a, n, p);
}

// "avx2" or "scalar"; diagnostics only.
const char* active_kernel_name();

} // namespace leflab::kernels
