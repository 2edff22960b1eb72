#pragma once

#include <cmath>
#include <string>

namespace ncm {

/// A neutrosophic number det + ind*I, where I is the indeterminacy symbol
/// satisfying I*I = I. The additive identity is {0, 0}, the multiplicative
/// identity {1, 0}, and pure indeterminacy is {0, 1}.
struct NeutroValue {
    double det = 0.0;
    double ind = 0.0;

    constexpr bool is_zero() const { return det == 0.0 && ind == 0.0; }
    constexpr bool is_pure_real() const { return ind == 0.0; }
    constexpr bool is_pure_indeterminate() const { return det == 0.0 && ind != 0.0; }
    bool is_finite() const { return std::isfinite(det) && std::isfinite(ind); }

    friend constexpr NeutroValue operator+(NeutroValue a, NeutroValue b) {
        return {a.det + b.det, a.ind + b.ind};
    }

    // (b1 + c1*I)(b2 + c2*I) expanded with I*I = I:
    //   b1*b2 + (b1*c2 + c1*b2 + c1*c2)*I
    friend constexpr NeutroValue operator*(NeutroValue a, NeutroValue b) {
        return {a.det * b.det, a.det * b.ind + a.ind * b.det + a.ind * b.ind};
    }

    constexpr NeutroValue& operator+=(NeutroValue other) {
        det += other.det;
        ind += other.ind;
        return *this;
    }

    friend constexpr bool operator==(NeutroValue, NeutroValue) = default;
};

constexpr NeutroValue kIndeterminate{0.0, 1.0};

inline bool almost_equal(NeutroValue a, NeutroValue b, double tol = 1e-9) {
    return std::fabs(a.det - b.det) <= tol && std::fabs(a.ind - b.ind) <= tol;
}

/// A thresholded node state.
enum class TriState { Off = 0, On = 1, Indeterminate = 2 };

/// Embedding used when a state vector is pushed back through the matrix:
/// Off -> {0,0}, On -> {1,0}, Indeterminate -> {0,1}.
constexpr NeutroValue to_value(TriState s) {
    switch (s) {
        case TriState::On: return {1.0, 0.0};
        case TriState::Indeterminate: return {0.0, 1.0};
        case TriState::Off: break;
    }
    return {0.0, 0.0};
}

/// The threshold function f(k). Case order matters:
/// a pure indeterminate value maps to Indeterminate; a mixed value is first
/// reduced to its determinate part; then the real part is compared against k
/// with a strict inequality, so det == k maps to Off.
constexpr TriState threshold(NeutroValue a, double k) {
    if (a.det == 0.0 && a.ind != 0.0) return TriState::Indeterminate;
    return a.det > k ? TriState::On : TriState::Off;
}

/// Minimal-digit decimal rendering, at most 9 fractional digits.
/// 0.8 -> "0.8", 1.7000000000000002 -> "1.7", -0.0 -> "0".
std::string format_real(double x);

/// "0", "0.8", "I", "0.8*I", "0.1 + 0.8*I"; a unit coefficient renders as
/// a bare "I" and a negative coefficient keeps its sign, e.g. "-0.3*I".
std::string to_string(const NeutroValue& v);

/// "0", "1", or "I".
std::string to_string(TriState s);

}  // namespace ncm
