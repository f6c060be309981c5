#include "tfilter/embodiment.hpp"

#include <string>

namespace tfilter {

std::string_view to_string(EmbodimentKind kind) {
    switch (kind) {
        case EmbodimentKind::deblock: return "deblock";
        case EmbodimentKind::deblur: return "deblur";
        case EmbodimentKind::upscale: return "upscale";
    }
    return "?";
}

EmbodimentKind parse_embodiment(std::string_view name) {
    if (name == "deblock") return EmbodimentKind::deblock;
    if (name == "deblur") return EmbodimentKind::deblur;
    if (name == "upscale") return EmbodimentKind::upscale;
    throw InvalidArgument("unknown embodiment '" + std::string(name) +
                          "' (expected deblock, deblur or upscale)");
}

EmbodimentSpec EmbodimentSpec::defaults(EmbodimentKind kind) {
    EmbodimentSpec s;
    s.kind = kind;
    s.classifier = kind == EmbodimentKind::upscale
                       ? ClassifierSpec{}
                       : ClassifierSpec::with_default_threshold(ComplexityMode::std_dev);
    return s;
}

void EmbodimentSpec::validate() const {
    compression.validate();
    gaussian.validate();
    peaking.validate();
    classifier.validate();
}

LumaPlane EmbodimentSpec::degrade(const LumaPlane& target) const {
    switch (kind) {
        case EmbodimentKind::deblock: return compress_blocky(target, compression);
        case EmbodimentKind::deblur: return gaussian_blur(target, gaussian);
        case EmbodimentKind::upscale: return downsample_2x(target);
    }
    throw InvalidArgument("bad embodiment");
}

LumaPlane EmbodimentSpec::enhance(const LumaPlane& degraded) const {
    switch (kind) {
        case EmbodimentKind::deblock: return smooth_artifacts(degraded, gaussian);
        case EmbodimentKind::deblur: return peaking_filter(degraded, peaking);
        case EmbodimentKind::upscale: return bilinear_upscale_2x(degraded);
    }
    throw InvalidArgument("bad embodiment");
}

}  // namespace tfilter
