#include "tfilter/lsq.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tfilter {

void ClassAccumulator::add(const Aperture& ap, double target) {
    for (std::size_t i = 0; i < kTaps; ++i) {
        const double ai = ap[i];
        double* row = &ata[i * kTaps];
        for (std::size_t j = 0; j < kTaps; ++j) row[j] += ai * ap[j];
        atb[i] += ai * target;
    }
    ++n;
}

ClassAccumulator& ClassAccumulator::operator+=(const ClassAccumulator& other) {
    for (std::size_t i = 0; i < ata.size(); ++i) ata[i] += other.ata[i];
    for (std::size_t i = 0; i < atb.size(); ++i) atb[i] += other.atb[i];
    n += other.n;
    return *this;
}

AccumulatorSet::AccumulatorSet(int class_bits) : class_bits_(class_bits) {
    if (class_bits < 1 || class_bits > 24)
        throw InvalidArgument("class_bits out of range: " + std::to_string(class_bits));
    classes_.resize(std::size_t{1} << class_bits);
}

void AccumulatorSet::accumulate(ClassId id, const Aperture& ap, double target) {
    if (id >= classes_.size())
        throw InvalidArgument("class id " + std::to_string(id) + " out of range for " +
                              std::to_string(class_bits_) + " class bits");
    classes_[id].add(ap, target);
}

void AccumulatorSet::accumulate(const TrainingPair& pair) {
    accumulate(pair.class_id, pair.aperture, pair.target);
}

void AccumulatorSet::accumulate_plane(const LumaPlane& processed, const LumaPlane& target,
                                      const ClassifierSpec& spec) {
    require_same_geometry(processed, target, "training pair");
    if (spec.class_bits() != class_bits_)
        throw InvalidArgument("classifier produces " + std::to_string(spec.class_bits()) +
                              "-bit classes, accumulator holds " + std::to_string(class_bits_));
    for (int y = 0; y < processed.height(); ++y)
        for (int x = 0; x < processed.width(); ++x) {
            const Aperture ap = extract_aperture(processed, x, y);
            classes_[classify(ap, spec)].add(ap, target.at(x, y));
        }
}

AccumulatorSet& AccumulatorSet::merge(const AccumulatorSet& other) {
    if (other.class_bits_ != class_bits_)
        throw GeometryError("cannot merge accumulators with " + std::to_string(class_bits_) +
                            " and " + std::to_string(other.class_bits_) + " class bits");
    for (std::size_t c = 0; c < classes_.size(); ++c) classes_[c] += other.classes_[c];
    return *this;
}

AccumulatorSet merge(AccumulatorSet a, const AccumulatorSet& b) {
    a.merge(b);
    return a;
}

Weights identity_weights() {
    Weights w{};
    w[kCenterIndex] = 1.0;
    return w;
}

std::optional<Weights> solve_normal_equations(const NormalMatrix& a_in, const Weights& b_in) {
    NormalMatrix a = a_in;
    Weights b = b_in;

    double max_diag = 0.0;
    for (std::size_t i = 0; i < kTaps; ++i) max_diag = std::max(max_diag, std::abs(a[i * kTaps + i]));
    const double tol = kRelativePivotTolerance * max_diag;
    if (!(max_diag > 0.0)) return std::nullopt;

    for (std::size_t col = 0; col < kTaps; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < kTaps; ++r)
            if (std::abs(a[r * kTaps + col]) > std::abs(a[pivot * kTaps + col])) pivot = r;
        if (!(std::abs(a[pivot * kTaps + col]) >= tol)) return std::nullopt;
        if (pivot != col) {
            for (std::size_t k = 0; k < kTaps; ++k)
                std::swap(a[col * kTaps + k], a[pivot * kTaps + k]);
            std::swap(b[col], b[pivot]);
        }
        const double p = a[col * kTaps + col];
        for (std::size_t r = col + 1; r < kTaps; ++r) {
            const double f = a[r * kTaps + col] / p;
            if (f == 0.0) continue;
            a[r * kTaps + col] = 0.0;
            for (std::size_t k = col + 1; k < kTaps; ++k) a[r * kTaps + k] -= f * a[col * kTaps + k];
            b[r] -= f * b[col];
        }
    }

    Weights x{};
    for (std::size_t i = kTaps; i-- > 0;) {
        double s = b[i];
        for (std::size_t k = i + 1; k < kTaps; ++k) s -= a[i * kTaps + k] * x[k];
        x[i] = s / a[i * kTaps + i];
    }
    for (double v : x)
        if (!std::isfinite(v)) return std::nullopt;
    return x;
}

CoefficientEntry solve_class(const ClassAccumulator& acc, const SolveOptions& opts) {
    CoefficientEntry e{identity_weights(), acc.n, SolveFlag::identity_fallback};
    if (acc.n == 0 || acc.n < opts.min_samples) return e;
    NormalMatrix a = acc.ata;
    if (opts.ridge > 0.0)
        for (std::size_t i = 0; i < kTaps; ++i) a[i * kTaps + i] += opts.ridge;
    if (auto w = solve_normal_equations(a, acc.atb)) {
        e.weights = *w;
        e.flag = SolveFlag::solved;
    }
    return e;
}

CoefficientTable::CoefficientTable(int class_bits) : class_bits_(class_bits) {
    if (class_bits < 1 || class_bits > 24)
        throw InvalidArgument("class_bits out of range: " + std::to_string(class_bits));
    entries_.assign(std::size_t{1} << class_bits,
                    CoefficientEntry{identity_weights(), 0, SolveFlag::identity_fallback});
}

CoefficientTable::CoefficientTable(int class_bits, std::vector<CoefficientEntry> entries)
    : class_bits_(class_bits), entries_(std::move(entries)) {
    if (class_bits < 1 || class_bits > 24)
        throw InvalidArgument("class_bits out of range: " + std::to_string(class_bits));
    if (entries_.size() != (std::size_t{1} << class_bits))
        throw GeometryError("coefficient table needs " +
                            std::to_string(std::size_t{1} << class_bits) + " entries, got " +
                            std::to_string(entries_.size()));
}

std::size_t CoefficientTable::solved_count() const {
    return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](const auto& e) {
        return e.flag == SolveFlag::solved;
    }));
}

CoefficientTable solve_all(const AccumulatorSet& acc, const SolveOptions& opts) {
    std::vector<CoefficientEntry> entries;
    entries.reserve(acc.class_count());
    for (const auto& c : acc.classes()) entries.push_back(solve_class(c, opts));
    return CoefficientTable(acc.class_bits(), std::move(entries));
}

AccumulatorSet accumulate_training(std::span<const LumaPlane> targets,
                                   std::span<const LumaPlane> degraded, const Enhancer& enhancer,
                                   const ClassifierSpec& spec) {
    spec.validate();
    if (targets.size() != degraded.size())
        throw InvalidArgument("training needs one degraded plane per target (" +
                              std::to_string(targets.size()) + " targets, " +
                              std::to_string(degraded.size()) + " degraded)");
    AccumulatorSet acc(spec.class_bits());
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const LumaPlane enhanced = enhancer ? enhancer(degraded[i]) : degraded[i];
        if (!enhanced.same_geometry(targets[i]))
            throw GeometryError("training pair " + std::to_string(i) + ": enhanced plane is " +
                                geometry_string(enhanced) + " but target is " +
                                geometry_string(targets[i]));
        acc.accumulate_plane(enhanced, targets[i], spec);
    }
    return acc;
}

CoefficientTable train(std::span<const LumaPlane> targets, std::span<const LumaPlane> degraded,
                       const Enhancer& enhancer, const ClassifierSpec& spec,
                       const SolveOptions& opts) {
    return solve_all(accumulate_training(targets, degraded, enhancer, spec), opts);
}

}  // namespace tfilter
