#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tfilter/classify.hpp"
#include "tfilter/plane.hpp"

namespace tfilter {

inline constexpr std::size_t kTaps = kApertureSize;

using Weights = std::array<double, kTaps>;
using NormalMatrix = std::array<double, kTaps * kTaps>;  // row-major

/// Normal-equation sums for one class: ata = sum a a^T, atb = sum a t.
struct ClassAccumulator {
    NormalMatrix ata{};
    Weights atb{};
    std::uint64_t n = 0;

    void add(const Aperture& ap, double target);
    ClassAccumulator& operator+=(const ClassAccumulator& other);

    double ata_at(std::size_t row, std::size_t col) const { return ata[row * kTaps + col]; }

    friend bool operator==(const ClassAccumulator&, const ClassAccumulator&) = default;
};

/// One processed aperture and the target sample it should map to.
struct TrainingPair {
    Aperture aperture{};
    double target = 0.0;
    ClassId class_id = 0;
};

/// Accumulators for every class of a classifier. Sets with the same
/// class_bits can be merged, so training may be split across inputs.
class AccumulatorSet {
public:
    explicit AccumulatorSet(int class_bits);

    int class_bits() const { return class_bits_; }
    std::size_t class_count() const { return classes_.size(); }

    void accumulate(const TrainingPair& pair);
    void accumulate(ClassId id, const Aperture& ap, double target);

    const ClassAccumulator& operator[](ClassId id) const { return classes_[id]; }
    std::span<const ClassAccumulator> classes() const { return classes_; }

    /// Every pixel of `processed` is classified and paired with the
    /// co-located sample of `target`.
    void accumulate_plane(const LumaPlane& processed, const LumaPlane& target,
                          const ClassifierSpec& spec);

    AccumulatorSet& merge(const AccumulatorSet& other);

    friend bool operator==(const AccumulatorSet&, const AccumulatorSet&) = default;

private:
    int class_bits_;
    std::vector<ClassAccumulator> classes_;
};

AccumulatorSet merge(AccumulatorSet a, const AccumulatorSet& b);

enum class SolveFlag : std::uint8_t { solved = 0, identity_fallback = 1 };

struct CoefficientEntry {
    Weights weights{};
    std::uint64_t n = 0;
    SolveFlag flag = SolveFlag::identity_fallback;

    friend bool operator==(const CoefficientEntry&, const CoefficientEntry&) = default;
};

Weights identity_weights();

struct SolveOptions {
    /// Classes with fewer samples keep identity weights.
    std::uint64_t min_samples = 2 * kTaps;
    /// Added to the diagonal before solving. Zero gives plain least squares.
    double ridge = 0.0;
};

/// Pivots smaller than this fraction of the largest initial diagonal entry
/// mark the system as singular.
inline constexpr double kRelativePivotTolerance = 1e-9;

/// Gaussian elimination with partial pivoting. Returns nothing when the
/// system is numerically singular.
std::optional<Weights> solve_normal_equations(const NormalMatrix& a, const Weights& b);

CoefficientEntry solve_class(const ClassAccumulator& acc, const SolveOptions& opts = {});

/// The trained look-up table: one 13-tap filter per class id.
class CoefficientTable {
public:
    explicit CoefficientTable(int class_bits);
    CoefficientTable(int class_bits, std::vector<CoefficientEntry> entries);

    /// All classes identity (output equals the centre sample).
    static CoefficientTable identity(int class_bits) { return CoefficientTable(class_bits); }

    int class_bits() const { return class_bits_; }
    std::size_t class_count() const { return entries_.size(); }
    const CoefficientEntry& operator[](ClassId id) const { return entries_[id]; }
    CoefficientEntry& operator[](ClassId id) { return entries_[id]; }
    std::span<const CoefficientEntry> entries() const { return entries_; }

    std::size_t solved_count() const;

    friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;

private:
    int class_bits_;
    std::vector<CoefficientEntry> entries_;
};

CoefficientTable solve_all(const AccumulatorSet& acc, const SolveOptions& opts = {});

using Enhancer = std::function<LumaPlane(const LumaPlane&)>;

/// Off-line training: enhance each degraded plane, classify every pixel of
/// the enhanced plane, pair its aperture with the target sample, then solve
/// every class.
CoefficientTable train(std::span<const LumaPlane> targets, std::span<const LumaPlane> degraded,
                       const Enhancer& enhancer, const ClassifierSpec& spec,
                       const SolveOptions& opts = {});

/// Accumulation half of train(), for callers that merge several runs.
AccumulatorSet accumulate_training(std::span<const LumaPlane> targets,
                                   std::span<const LumaPlane> degraded, const Enhancer& enhancer,
                                   const ClassifierSpec& spec);

}  // namespace tfilter
