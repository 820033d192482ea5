#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "hochlab/sparse.hpp"

namespace hochlab::modular {

// Largest prime whose square plus itself still fits in 31 bits; every
// intermediate of the row kernels stays below 2^31.
constexpr std::uint32_t kMaxPrime = 46337;

enum class Kernel { Scalar, Avx2 };

bool is_supported_prime(std::uint32_t p);
bool avx2_available();
Kernel best_kernel();
std::string kernel_name(Kernel k);

// dst[i] = (dst[i] + factor * src[i]) mod p, entries in [0, p).
void row_axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t p,
                     std::size_t n);
#if defined(__x86_64__) || defined(__i386__)
void row_axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t p,
                   std::size_t n);
#endif
void row_axpy(Kernel k, std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t p,
              std::size_t n);

std::uint32_t inverse(std::uint32_t a, std::uint32_t p);
// Image of a rational number in F_p; throws when p divides the denominator.
std::uint32_t reduce(const Scalar& q, std::uint32_t p);

// Rank over F_p by dense elimination.  Throws when rows * cols exceeds cap.
std::size_t rank(const SparseMatrix& m, std::uint32_t p, Kernel k, std::size_t cap = 1u << 26);
inline std::size_t rank(const SparseMatrix& m, std::uint32_t p) { return rank(m, p, best_kernel()); }

}  // namespace hochlab::modular
