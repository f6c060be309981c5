#pragma once

#include <cstdint>

#include "tfilter/plane.hpp"

namespace tfilter {

/// Deterministic synthetic test picture with a mix of smooth gradients,
/// hard-edged shapes, thin lines, periodic textures and mild noise. Used as
/// training and test material when no real footage is at hand. The same
/// seed and size always give the same plane.
LumaPlane synth_image(std::uint64_t seed, int width, int height);

}  // namespace tfilter
