#include "skewproj/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace skewproj::kernels {

__attribute__((target("avx2"))) void collect_orbit_minima_avx2(
    AdjCode begin, AdjCode end, std::span<const std::uint32_t> masks,
    std::vector<AdjCode>& out) {
  const __m256i iota = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  AdjCode c = begin;
  for (; c + 8 <= end; c += 8) {
    __m256i codes = _mm256_add_epi32(_mm256_set1_epi32(int(c)), iota);
    __m256i dead = _mm256_setzero_si256();
    for (std::uint32_t m : masks) {
      __m256i x = _mm256_xor_si256(codes, _mm256_set1_epi32(int(m)));
      // codes and masks stay below 2^31, so the signed compare is unsigned
      dead = _mm256_or_si256(dead, _mm256_cmpgt_epi32(codes, x));
      if (_mm256_movemask_epi8(dead) == -1) break;
    }
    int alive = ~_mm256_movemask_ps(_mm256_castsi256_ps(dead)) & 0xff;
    while (alive) {
      int lane = __builtin_ctz(alive);
      alive &= alive - 1;
      out.push_back(c + AdjCode(lane));
    }
  }
  for (; c != end; ++c) {
    bool keep = true;
    for (std::uint32_t m : masks)
      if ((std::uint32_t(c) ^ m) < std::uint32_t(c)) {
        keep = false;
        break;
      }
    if (keep) out.push_back(c);
  }
}

__attribute__((target("avx2"))) AdjCode orbit_min_avx2(
    AdjCode code, std::span<const std::uint32_t> masks) {
  __m256i cv = _mm256_set1_epi32(int(std::uint32_t(code)));
  __m256i acc = cv;
  std::size_t i = 0;
  for (; i + 8 <= masks.size(); i += 8) {
    __m256i mv = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(masks.data() + i));
    acc = _mm256_min_epu32(acc, _mm256_xor_si256(cv, mv));
  }
  alignas(32) std::uint32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  AdjCode best = code;
  for (std::uint32_t v : lanes) best = std::min(best, AdjCode(v));
  for (; i < masks.size(); ++i)
    best = std::min(best, AdjCode(std::uint32_t(code) ^ masks[i]));
  return best;
}

}  // namespace skewproj::kernels

#endif
