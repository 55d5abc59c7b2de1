#pragma once

namespace nilq {

// Hard limits. Basis sizes explode combinatorially past these; callers may
// raise them explicitly (CLI --max-class / NILQ_MAX_CLASS).
inline constexpr int kDefaultMaxClass = 10;
inline constexpr int kDefaultMaxBchClass = 8;
inline constexpr int kDefaultBettiDimCap = 20;
inline constexpr long kWeightSearchCap = 1000000;

}  // namespace nilq
