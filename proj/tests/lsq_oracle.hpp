#pragma once

// Test-only reference routines, written independently of the library solver.

#include <array>
#include <cmath>
#include <map>
#include <random>
#include <utility>

#include "tfilter/lsq.hpp"
#include "tfilter/repair.hpp"

namespace tfilter::testing {

/// Gauss-Jordan elimination with full pivoting on an augmented matrix.
inline Weights full_pivot_solve(const NormalMatrix& a_in, const Weights& b_in) {
    constexpr int n = static_cast<int>(kTaps);
    double m[n][n + 1];
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = a_in[static_cast<std::size_t>(i * n + j)];
        m[i][n] = b_in[static_cast<std::size_t>(i)];
    }
    int col_of[n];
    for (int j = 0; j < n; ++j) col_of[j] = j;
    for (int k = 0; k < n; ++k) {
        int pr = k, pc = k;
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j)
                if (std::abs(m[i][j]) > std::abs(m[pr][pc])) { pr = i; pc = j; }
        for (int j = 0; j <= n; ++j) std::swap(m[k][j], m[pr][j]);
        for (int i = 0; i < n; ++i) std::swap(m[i][k], m[i][pc]);
        std::swap(col_of[k], col_of[pc]);
        const double p = m[k][k];
        for (int j = 0; j <= n; ++j) m[k][j] /= p;
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            const double f = m[i][k];
            for (int j = 0; j <= n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    Weights x{};
    for (int k = 0; k < n; ++k) x[static_cast<std::size_t>(col_of[k])] = m[k][n];
    return x;
}

/// Random symmetric positive-definite matrix M^T M + shift I.
inline NormalMatrix random_spd(std::mt19937_64& rng, double shift) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    double m[kTaps][kTaps];
    for (auto& row : m)
        for (auto& v : row) v = d(rng);
    NormalMatrix a{};
    for (std::size_t i = 0; i < kTaps; ++i)
        for (std::size_t j = 0; j < kTaps; ++j) {
            double s = i == j ? shift : 0.0;
            for (std::size_t k = 0; k < kTaps; ++k) s += m[k][i] * m[k][j];
            a[i * kTaps + j] = s;
        }
    return a;
}

/// Per-class sum of squared errors of `table` (or identity when null) on a
/// processed/target plane pair, computed pixel by pixel.
inline std::map<ClassId, double> per_class_residual(const LumaPlane& processed,
                                                    const LumaPlane& target,
                                                    const ClassifierSpec& spec,
                                                    const CoefficientTable* table) {
    std::map<ClassId, double> out;
    const Weights id = identity_weights();
    for (int y = 0; y < processed.height(); ++y)
        for (int x = 0; x < processed.width(); ++x) {
            const Aperture ap = extract_aperture(processed, x, y);
            const ClassId c = classify(ap, spec);
            double f = 0.0;
            const Weights& w = table ? (*table)[c].weights : id;
            for (std::size_t i = 0; i < kTaps; ++i) f += w[i] * ap[i];
            const double e = target.at(x, y) - f;
            out[c] += e * e;
        }
    return out;
}

}  // namespace tfilter::testing
