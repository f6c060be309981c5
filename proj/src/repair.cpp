#include "tfilter/repair.hpp"

#include <string>

namespace tfilter {

double apply_weights(const Aperture& ap, const Weights& w) {
    double s = 0.0;
    for (std::size_t i = 0; i < kTaps; ++i) s += w[i] * ap[i];
    return s;
}

namespace {

void check_table(const CoefficientTable& table, const ClassifierSpec& spec) {
    spec.validate();
    if (table.class_bits() != spec.class_bits())
        throw InvalidArgument("classifier '" + std::string(to_string(spec.mode)) + "' uses " +
                              std::to_string(spec.class_bits()) + " class bits but the table has " +
                              std::to_string(table.class_bits()));
}

// Calls fn(index, aperture, class id) for every pixel.
template <typename Fn>
void for_each_pixel(const LumaPlane& plane, const ClassifierSpec& spec, Fn&& fn) {
    std::size_t i = 0;
    for (int y = 0; y < plane.height(); ++y)
        for (int x = 0; x < plane.width(); ++x, ++i) {
            const Aperture ap = extract_aperture(plane, x, y);
            fn(i, ap, classify(ap, spec));
        }
}

}  // namespace

std::vector<double> filter_plane(const LumaPlane& plane, const CoefficientTable& table,
                                 const ClassifierSpec& spec) {
    check_table(table, spec);
    std::vector<double> out(plane.size());
    for_each_pixel(plane, spec, [&](std::size_t i, const Aperture& ap, ClassId id) {
        out[i] = apply_weights(ap, table[id].weights);
    });
    return out;
}

LumaPlane repair_plane(const LumaPlane& plane, const CoefficientTable& table,
                       const ClassifierSpec& spec) {
    const auto values = filter_plane(plane, table, spec);
    LumaPlane out(plane.width(), plane.height());
    auto dst = out.samples();
    for (std::size_t i = 0; i < values.size(); ++i) dst[i] = to_sample(values[i]);
    return out;
}

std::vector<ClassId> classify_map(const LumaPlane& plane, const ClassifierSpec& spec) {
    spec.validate();
    std::vector<ClassId> ids(plane.size());
    for_each_pixel(plane, spec, [&](std::size_t i, const Aperture&, ClassId id) { ids[i] = id; });
    return ids;
}

}  // namespace tfilter
