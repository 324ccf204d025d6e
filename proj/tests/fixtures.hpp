#pragma once

#include "poro2d/poro2d.hpp"

namespace fixtures {

inline const poro2d::PoroelasticMaterial kTop{2200, 950, 0.4, 2, 6.9e9, 2e9, 6.7e9, 3e9};
inline const poro2d::PoroelasticMaterial kBottom{2650, 750, 0.2, 2, 37e9, 1.7e9, 2.2e9, 4.4e9};
inline constexpr double kDepth = 500.0;
inline constexpr poro2d::SourceMix kBulk{-1e10, -1e10, 0.0};
inline constexpr poro2d::SourceMix kPressure{0.0, 0.0, 1.0};
inline constexpr poro2d::Receiver kAbove{400.0, 533.0};
inline constexpr poro2d::Receiver kBelow{400.0, -533.0};

inline poro2d::Model golden_model(const poro2d::SourceMix& mix = kBulk) {
  return poro2d::make_model(kTop, kBottom, kDepth, mix);
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace fixtures
