#pragma once

#include <cstddef>
#include <cstdint>

namespace gosszeta {

/// Default number of base-p digits carried by a PadicInt.
inline constexpr std::size_t kDefaultDigitPrecision = 32;

/// Largest degree-in-1/T bound l accepted by the truncated zeta sums.
inline constexpr std::int64_t kMaxInnerDegree = 12;

/// Largest enumeration q^(l+1) the inner sums will attempt.
inline constexpr std::uint64_t kMaxEnumerationSize = std::uint64_t(1) << 20;

/// Largest shift index accepted by the difference-operator helpers.
inline constexpr std::int64_t kMaxShiftSteps = 4096;

/// Largest supported extension degree e of F_{p^e}.
inline constexpr std::uint32_t kMaxExtensionDegree = 32;

/// Fixed default seed for every randomized property test and sampler.
inline constexpr std::uint64_t kDefaultSeed = 20260810u;

} // namespace gosszeta
