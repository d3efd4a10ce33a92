#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "skewproj/codes.hpp"

namespace skewproj::kernels {

// Appends to out, in ascending order, every code c in [begin, end) with
// c <= (c ^ m) for all masks m: the minimal member of each switching orbit
// meeting the range. masks must not contain 0.
void collect_orbit_minima_scalar(AdjCode begin, AdjCode end,
                                 std::span<const AdjCode> masks,
                                 std::vector<AdjCode>& out);

// Minimum of code and code ^ m over all masks.
AdjCode orbit_min_scalar(AdjCode code, std::span<const AdjCode> masks);

bool cpu_has_avx2();

#if defined(__x86_64__) || defined(__i386__)
// AVX2 variants on eight 32-bit lanes; every mask and every code in range
// must fit in 31 bits (true whenever n <= 8). Output matches the scalar
// kernels bit for bit.
void collect_orbit_minima_avx2(AdjCode begin, AdjCode end,
                               std::span<const std::uint32_t> masks,
                               std::vector<AdjCode>& out);
AdjCode orbit_min_avx2(AdjCode code, std::span<const std::uint32_t> masks);
#endif

// Dispatching wrapper: picks AVX2 when the CPU supports it and the mask width
// allows, scalar otherwise; SKEWPROJ_KERNEL=scalar|avx2 forces a choice
// (avx2 silently falls back when unsupported or too wide).
class OrbitScanner {
public:
  explicit OrbitScanner(std::span<const AdjCode> masks);

  void collect_minima(AdjCode begin, AdjCode end,
                      std::vector<AdjCode>& out) const;
  AdjCode orbit_min(AdjCode code) const;
  const char* kernel_name() const { return use_avx2_ ? "avx2" : "scalar"; }

private:
  std::vector<AdjCode> masks64_;
  std::vector<std::uint32_t> masks32_;
  bool use_avx2_ = false;
};

}  // namespace skewproj::kernels
