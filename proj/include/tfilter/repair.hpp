#pragma once

#include <vector>

#include "tfilter/classify.hpp"
#include "tfilter/lsq.hpp"

namespace tfilter {

/// Run-time filtering: each pixel is classified from its aperture and
/// replaced by the dot product of that aperture with its class weights.
LumaPlane repair_plane(const LumaPlane& plane, const CoefficientTable& table,
                       const ClassifierSpec& spec);

/// Same as repair_plane without the final rounding and clamping.
std::vector<double> filter_plane(const LumaPlane& plane, const CoefficientTable& table,
                                 const ClassifierSpec& spec);

/// Class id of every pixel, row-major, as used by repair_plane.
std::vector<ClassId> classify_map(const LumaPlane& plane, const ClassifierSpec& spec);

/// Dot product of one aperture with a weight vector.
double apply_weights(const Aperture& ap, const Weights& w);

}  // namespace tfilter
