#include "hochlab/modular.hpp"

#include <stdexcept>
#include <vector>

namespace hochlab::modular {

bool is_supported_prime(std::uint32_t p) {
  if (p < 2 || p > kMaxPrime) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Kernel best_kernel() { return avx2_available() ? Kernel::Avx2 : Kernel::Scalar; }

std::string kernel_name(Kernel k) { return k == Kernel::Avx2 ? "avx2" : "scalar"; }

void row_axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t p,
                     std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = (dst[i] + factor * src[i]) % p;
}

void row_axpy(Kernel k, std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t p,
              std::size_t n) {
#if defined(__x86_64__) || defined(__i386__)
  if (k == Kernel::Avx2) {
    row_axpy_avx2(dst, src, factor, p, n);
    return;
  }
#endif
  (void)k;
  row_axpy_scalar(dst, src, factor, p, n);
}

std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::domain_error("element is not invertible modulo p");
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

std::uint32_t reduce(const Scalar& q, std::uint32_t p) {
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  if (den == 0) throw std::domain_error("denominator vanishes modulo p");
  if (num < 0) num += p;
  auto n = static_cast<std::uint64_t>(num.get_ui());
  return static_cast<std::uint32_t>(n * inverse(static_cast<std::uint32_t>(den.get_ui()), p) % p);
}

std::size_t rank(const SparseMatrix& m, std::uint32_t p, Kernel k, std::size_t cap) {
  if (!is_supported_prime(p)) throw std::invalid_argument("unsupported prime");
  const std::size_t rows = m.cols;  // work on the transpose: one row per column of m
  const std::size_t width = m.rows;
  if (rows == 0 || width == 0) return 0;
  if (rows * width > cap) throw std::length_error("matrix too large for dense modular rank");
  std::vector<std::uint32_t> a(rows * width, 0);
  for (std::size_t j = 0; j < rows; ++j)
    for (const auto& [i, c] : m.columns[j]) a[j * width + i] = reduce(c, p);
  std::size_t r = 0;
  for (std::size_t col = 0; col < width && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot * width + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t t = col; t < width; ++t) std::swap(a[pivot * width + t], a[r * width + t]);
    const std::uint32_t inv = inverse(a[r * width + col], p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint32_t v = a[i * width + col];
      if (v == 0) continue;
      const std::uint32_t factor = static_cast<std::uint32_t>((p - v) * static_cast<std::uint64_t>(inv) % p);
      row_axpy(k, &a[i * width + col], &a[r * width + col], factor, p, width - col);
    }
    ++r;
  }
  return r;
}

}  // namespace hochlab::modular
