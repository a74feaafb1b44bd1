// Copyright 2026 The qdice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// @file
/// Exact real two-dimensional Hilbert-space machinery: states, face
/// observables, projectors, the Born rule, collapse, sequential joint
/// probabilities and the total-probability decomposition with its
/// interference term.
///
/// All quadratic forms are evaluated as Rayleigh quotients
/// (value = <psi|M|psi> / <psi|psi>), which makes them invariant under the
/// small normalization slack permitted by the StateVector constructor and
/// lets the model's special values {0, 1/2, 1} come out bit-exact even
/// though 1/sqrt(2) is not exactly representable.

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdice {

/// Global tolerance for floating-point equality checks.
inline constexpr double kTolerance = 1e-12;

/// The two roll axes of the game table.
enum class Axis { z, x };

namespace detail {

inline constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

struct Vec2 {
    double c0 = 0.0;
    double c1 = 0.0;
};

struct Mat2 {
    double m00 = 0.0, m01 = 0.0;
    double m10 = 0.0, m11 = 0.0;
};

constexpr Mat2 mul(const Mat2& a, const Mat2& b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

constexpr Mat2 sub(const Mat2& a, const Mat2& b) {
    return {a.m00 - b.m00, a.m01 - b.m01, a.m10 - b.m10, a.m11 - b.m11};
}

constexpr Vec2 apply(const Mat2& m, const Vec2& v) {
    return {m.m00 * v.c0 + m.m01 * v.c1, m.m10 * v.c0 + m.m11 * v.c1};
}

constexpr double dot(const Vec2& a, const Vec2& b) {
    return a.c0 * b.c0 + a.c1 * b.c1;
}

constexpr Mat2 identity_mat() { return {1.0, 0.0, 0.0, 1.0}; }

constexpr double max_abs_entry(const Mat2& m) {
    double r = m.m00 < 0.0 ? -m.m00 : m.m00;
    const double e01 = m.m01 < 0.0 ? -m.m01 : m.m01;
    const double e10 = m.m10 < 0.0 ? -m.m10 : m.m10;
    const double e11 = m.m11 < 0.0 ? -m.m11 : m.m11;
    if (e01 > r) r = e01;
    if (e10 > r) r = e10;
    if (e11 > r) r = e11;
    return r;
}

}  // namespace detail

/// Thrown by collapse() when conditioning on an outcome of (numerically)
/// zero probability.
class ZeroProbabilityCollapse : public std::domain_error {
  public:
    ZeroProbabilityCollapse()
        : std::domain_error("collapse onto an outcome of zero probability") {}
};

/// A unit vector in the real two-dimensional state space, written in the
/// z-eigenbasis: psi = a_plus |+>_z + a_minus |->_z.
class StateVector {
  public:
    /// Requires a_plus^2 + a_minus^2 = 1 within kTolerance.
    constexpr StateVector(double a_plus, double a_minus)
        : a_plus_(a_plus), a_minus_(a_minus) {
        const double norm2 = a_plus * a_plus + a_minus * a_minus;
        const double dev = norm2 - 1.0;
        if (!(dev <= kTolerance && dev >= -kTolerance)) {
            throw std::invalid_argument("StateVector: amplitudes are not normalized");
        }
    }

    constexpr double a_plus() const noexcept { return a_plus_; }
    constexpr double a_minus() const noexcept { return a_minus_; }

    static constexpr StateVector plus_z() { return {1.0, 0.0}; }
    static constexpr StateVector minus_z() { return {0.0, 1.0}; }
    static constexpr StateVector plus_x() {
        return {detail::kInvSqrt2, detail::kInvSqrt2};
    }
    static constexpr StateVector minus_x() {
        return {detail::kInvSqrt2, -detail::kInvSqrt2};
    }

  private:
    double a_plus_;
    double a_minus_;
};

/// A real symmetric 2x2 observable.
class Observable {
  public:
    /// Entrywise constructor; m01 and m10 must match exactly.
    constexpr Observable(double m00, double m01, double m10, double m11)
        : m_{m00, m01, m10, m11} {
        if (m01 != m10) {
            throw std::invalid_argument("Observable: matrix is not symmetric");
        }
    }

    /// Symmetric constructor from the upper triangle.
    constexpr Observable(double m00, double m01, double m11)
        : Observable(m00, m01, m01, m11) {}

    constexpr double m00() const noexcept { return m_.m00; }
    constexpr double m01() const noexcept { return m_.m01; }
    constexpr double m10() const noexcept { return m_.m10; }
    constexpr double m11() const noexcept { return m_.m11; }

    static constexpr Observable identity() { return {1.0, 0.0, 1.0}; }

    constexpr const detail::Mat2& mat() const noexcept { return m_; }

  private:
    detail::Mat2 m_;
};

/// An orthogonal projector: symmetric and idempotent within kTolerance.
class Projector : public Observable {
  public:
    constexpr Projector(double m00, double m01, double m11)
        : Observable(m00, m01, m11) {
        const detail::Mat2 residual = detail::sub(detail::mul(mat(), mat()), mat());
        if (!(detail::max_abs_entry(residual) <= kTolerance)) {
            throw std::invalid_argument("Projector: matrix is not idempotent");
        }
    }

    /// The complementary projector I - P.
    constexpr Projector complement() const {
        return {1.0 - m00(), -m01(), 1.0 - m11()};
    }
};

/// The four terms of the quantum total-probability formula
///   marginal = joint_then + joint_complement_then + interference.
struct TotalProbabilityDecomposition {
    double marginal = 0.0;
    double joint_then = 0.0;
    double joint_complement_then = 0.0;
    double interference = 0.0;

    constexpr double closure_residual() const noexcept {
        return marginal - joint_then - joint_complement_then - interference;
    }
};

/// The face observable for a roll along `axis`:
/// F_z = ((1,0),(0,-1)), F_x = ((0,1),(1,0)).
constexpr Observable make_face_observable(Axis axis) {
    return axis == Axis::z ? Observable{1.0, 0.0, -1.0} : Observable{0.0, 1.0, 0.0};
}

/// The rank-one eigenprojector of the face observable for `axis` with
/// eigenvalue `sign` (+1 or -1). Satisfies F = P_+ - P_- exactly.
constexpr Projector projector_for(Axis axis, int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("projector_for: sign must be +1 or -1");
    }
    if (axis == Axis::z) {
        return sign == 1 ? Projector{1.0, 0.0, 0.0} : Projector{0.0, 0.0, 1.0};
    }
    return sign == 1 ? Projector{0.5, 0.5, 0.5} : Projector{0.5, -0.5, 0.5};
}

namespace detail {

constexpr Vec2 as_vec(const StateVector& s) { return {s.a_plus(), s.a_minus()}; }

/// <psi|M|psi> / <psi|psi>.
constexpr double rayleigh(const StateVector& s, const Mat2& m) {
    const Vec2 v = as_vec(s);
    return dot(v, apply(m, v)) / dot(v, v);
}

}  // namespace detail

/// Born rule: the probability <psi|P|psi> of the outcome projected by `p`.
constexpr double born_probability(const StateVector& state, const Projector& p) {
    return detail::rayleigh(state, p.mat());
}

/// Expectation value <psi|F|psi> of a symmetric observable.
constexpr double expectation(const StateVector& state, const Observable& f) {
    return detail::rayleigh(state, f.mat());
}

/// Projection postulate: the post-measurement state P|psi> / ||P|psi>||.
/// Throws ZeroProbabilityCollapse when born_probability(state, p) <= kTolerance.
inline StateVector collapse(const StateVector& state, const Projector& p) {
    if (born_probability(state, p) <= kTolerance) {
        throw ZeroProbabilityCollapse{};
    }
    const detail::Vec2 v = detail::apply(p.mat(), detail::as_vec(state));
    const double norm = std::sqrt(detail::dot(v, v));
    return {v.c0 / norm, v.c1 / norm};
}

/// Joint probability of two sequential ideal measurements,
/// <psi| P_first P_then P_first |psi>.
constexpr double sequential_joint_probability(const StateVector& state,
                                              const Projector& first,
                                              const Projector& then) {
    const detail::Vec2 psi = detail::as_vec(state);
    const detail::Vec2 v = detail::apply(first.mat(), psi);
    return detail::dot(v, detail::apply(then.mat(), v)) / detail::dot(psi, psi);
}

/// The interference term 2 <psi| P_alpha P_beta P_alphabar |psi| with
/// P_alphabar = I - P_alpha. All amplitudes are real, so no real part
/// needs to be taken.
constexpr double interference_term(const StateVector& state,
                                   const Projector& p_alpha,
                                   const Projector& p_beta) {
    const detail::Vec2 psi = detail::as_vec(state);
    detail::Vec2 w = detail::apply(p_alpha.complement().mat(), psi);
    w = detail::apply(p_beta.mat(), w);
    w = detail::apply(p_alpha.mat(), w);
    return 2.0 * detail::dot(psi, w) / detail::dot(psi, psi);
}

/// Splits the marginal probability of the beta outcome into the two
/// sequential paths through the alpha measurement plus the interference
/// term. The classical law of total probability corresponds to a vanishing
/// interference term.
constexpr TotalProbabilityDecomposition total_probability_decomposition(
    const StateVector& state, const Projector& p_alpha, const Projector& p_beta) {
    return {born_probability(state, p_beta),
            sequential_joint_probability(state, p_alpha, p_beta),
            sequential_joint_probability(state, p_alpha.complement(), p_beta),
            interference_term(state, p_alpha, p_beta)};
}

/// True iff the commutator AB - BA vanishes within kTolerance.
constexpr bool commutes(const Observable& a, const Observable& b) {
    const detail::Mat2 c =
        detail::sub(detail::mul(a.mat(), b.mat()), detail::mul(b.mat(), a.mat()));
    return detail::max_abs_entry(c) < kTolerance;
}

}  // namespace qdice
