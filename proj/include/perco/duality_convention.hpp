#pragma once

// Generated by tools/pin_duality from an exhaustive survey of the fixture
// graphs. Regenerate rather than edit.

#include "perco/dual.hpp"

namespace perco {

inline constexpr DualConvention kPinnedConvention{CrossingOrientation::LeftToRight, CycleReading::Clockwise, ArcChoice::FromSource};
inline constexpr DualityVerdict kPinnedVerdict = DualityVerdict::HoldsComplemented;

}  // namespace perco
