#pragma once

#include <string_view>

#include "tfilter/classify.hpp"
#include "tfilter/degrade.hpp"
#include "tfilter/enhance.hpp"

namespace tfilter {

/// The three repair scenarios. Each pairs a degradation with the weak
/// enhancement step whose output the trained filter repairs.
///
///   deblock   compress_blocky  -> smooth_artifacts     ADRC + STD bit
///   deblur    gaussian_blur    -> peaking_filter       ADRC + STD bit
///   upscale   downsample_2x    -> bilinear_upscale_2x  ADRC only
enum class EmbodimentKind { deblock, deblur, upscale };

std::string_view to_string(EmbodimentKind kind);
EmbodimentKind parse_embodiment(std::string_view name);

struct EmbodimentSpec {
    EmbodimentKind kind = EmbodimentKind::deblock;
    CompressionSpec compression;
    /// Blur used as the deblur degradation and as the deblock enhancement.
    GaussianSpec gaussian;
    PeakingSpec peaking;
    ClassifierSpec classifier;

    /// Defaults for `kind`: quality 20, radius 2, sigma 1, alpha 0.2 and the
    /// classifier listed above.
    static EmbodimentSpec defaults(EmbodimentKind kind);

    LumaPlane degrade(const LumaPlane& target) const;
    LumaPlane enhance(const LumaPlane& degraded) const;

    /// True when degrade/enhance change the plane geometry.
    bool resamples() const { return kind == EmbodimentKind::upscale; }

    void validate() const;
};

}  // namespace tfilter
