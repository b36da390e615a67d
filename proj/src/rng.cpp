#include "ginvkit/rng.hpp"

#include <cmath>

#ifdef _MSC_VER
#include <intrin.h>
#endif

namespace ginvkit {

namespace {

constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline std::uint64_t mulhi64(std::uint64_t a, std::uint64_t b) {
#if defined(__SIZEOF_INT128__)
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) >> 64);
#else
  return __umulh(a, b);
#endif
}

}  // namespace

std::array<std::uint64_t, 4> Philox::block(const std::array<std::uint64_t, 4>& counter,
                                           const std::array<std::uint64_t, 2>& key) {
  std::array<std::uint64_t, 4> x = counter;
  std::array<std::uint64_t, 2> k = key;
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t hi0 = mulhi64(x[0], kMul0);
    const std::uint64_t lo0 = x[0] * kMul0;
    const std::uint64_t hi1 = mulhi64(x[2], kMul1);
    const std::uint64_t lo1 = x[2] * kMul1;
    x = {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
    k[0] += kWeyl0;
    k[1] += kWeyl1;
  }
  return x;
}

void Philox::refill() {
  buffer_ = block(counter_, key_);
  buffer_pos_ = 0;
  // 256-bit little-endian counter increment
  for (auto& lane : counter_) {
    if (++lane != 0) break;
  }
}

std::uint64_t Philox::next_u64() {
  if (buffer_pos_ >= 4) refill();
  return buffer_[buffer_pos_++];
}

double Philox::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Philox::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_gaussian_;
  }
  // u1 in (0,1] so the log is finite
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  spare_gaussian_ = r * std::sin(angle);
  have_spare_ = true;
  return r * std::cos(angle);
}

double Philox::sign() { return (next_u64() & 1u) ? 1.0 : -1.0; }

}  // namespace ginvkit
