#pragma once

#include <array>
#include <cstdint>

// Counter-based random number generation so that sweep points and
// Monte-Carlo samples are reproducible bit-exactly from (seed, sample,
// axis) alone, independent of thread scheduling and across language
// reimplementations.
//
// Stream definition (documented contract):
//   * Generator: Philox-4x32-10 (Salmon et al., SC'11), multipliers
//     0xD2511F53 / 0xCD9E8D57, Weyl constants 0x9E3779B9 / 0xBB67AE85.
//   * key = (seed mod 2^32, seed >> 32); counter = (sample mod 2^32,
//     sample >> 32, axis, stream).
//   * uniform: u = ((out[1] << 32 | out[0]) >> 11) * 2^-53 + 2^-54,
//     strictly inside (0, 1).
//   * gaussian: Wichura's PPND16 inverse normal CDF (AS 241) applied to u.

namespace qgem::rng {

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

/// Ten-round Philox-4x32 block function.
Counter philox4x32(Counter counter, Key key);

/// Uniform double strictly inside (0, 1) from one Philox block.
double uniform_open01(std::uint64_t seed, std::uint64_t sample, std::uint32_t axis,
                      std::uint32_t stream = 0);

/// Inverse of the standard normal CDF (Wichura AS 241, ~1e-16 relative).
double inverse_normal_cdf(double p);

/// Standard normal draw for one (seed, sample, axis) cell.
double gaussian(std::uint64_t seed, std::uint64_t sample, std::uint32_t axis,
                std::uint32_t stream = 0);

}  // namespace qgem::rng
