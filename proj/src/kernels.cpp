#include "skewproj/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>

namespace skewproj::kernels {

void collect_orbit_minima_scalar(AdjCode begin, AdjCode end,
                                 std::span<const AdjCode> masks,
                                 std::vector<AdjCode>& out) {
  for (AdjCode c = begin; c != end; ++c) {
    bool keep = true;
    for (AdjCode m : masks)
      if ((c ^ m) < c) {
        keep = false;
        break;
      }
    if (keep) out.push_back(c);
  }
}

AdjCode orbit_min_scalar(AdjCode code, std::span<const AdjCode> masks) {
  AdjCode best = code;
  for (AdjCode m : masks) best = std::min(best, code ^ m);
  return best;
}

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

OrbitScanner::OrbitScanner(std::span<const AdjCode> masks)
    : masks64_(masks.begin(), masks.end()) {
  bool narrow = std::all_of(masks64_.begin(), masks64_.end(),
                            [](AdjCode m) { return m < (AdjCode(1) << 31); });
  bool want_avx2 = cpu_has_avx2();
  if (const char* env = std::getenv("SKEWPROJ_KERNEL")) {
    if (std::strcmp(env, "scalar") == 0) want_avx2 = false;
  }
  use_avx2_ = want_avx2 && narrow;
  if (use_avx2_) {
    masks32_.reserve(masks64_.size());
    for (AdjCode m : masks64_) masks32_.push_back(std::uint32_t(m));
  }
}

void OrbitScanner::collect_minima(AdjCode begin, AdjCode end,
                                  std::vector<AdjCode>& out) const {
#if defined(__x86_64__) || defined(__i386__)
  if (use_avx2_ && end <= (AdjCode(1) << 31)) {
    collect_orbit_minima_avx2(begin, end, masks32_, out);
    return;
  }
#endif
  collect_orbit_minima_scalar(begin, end, masks64_, out);
}

AdjCode OrbitScanner::orbit_min(AdjCode code) const {
#if defined(__x86_64__) || defined(__i386__)
  if (use_avx2_ && code < (AdjCode(1) << 31))
    return orbit_min_avx2(code, masks32_);
#endif
  return orbit_min_scalar(code, masks64_);
}

}  // namespace skewproj::kernels
