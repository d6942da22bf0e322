#pragma once

#include <vector>

#include "hadwalk/engine.hpp"

namespace hadwalk {

// Membership in the orthogonal class: |alpha| = |beta| and the bilinear
// form alpha*conj(beta) + conj(alpha)*beta vanishes. Equivalently beta is
// +/- i alpha up to the common modulus.
template <class S>
bool is_perp(const QubitState<S>& phi) {
    using T = ScalarTraits<S>;
    auto mod_diff = T::norm_sq(phi.left) - T::norm_sq(phi.right);
    if (!T::prob_is_zero(mod_diff))
        return false;
    S bilinear = phi.left * T::conj(phi.right) + T::conj(phi.left) * phi.right;
    return T::prob_is_zero(T::norm_sq(bilinear));
}

enum class MirrorBranch { plus, minus, none };

// Which mirror sign the state obeys: beta = +i alpha (plus) or -i alpha (minus).
template <class S>
MirrorBranch mirror_branch(const QubitState<S>& phi) {
    using T = ScalarTraits<S>;
    auto i_alpha = phi.left * T::make(0, 1);
    if (T::prob_is_zero(T::norm_sq(phi.right - i_alpha)))
        return MirrorBranch::plus;
    if (T::prob_is_zero(T::norm_sq(phi.right + i_alpha)))
        return MirrorBranch::minus;
    return MirrorBranch::none;
}

template <class S>
struct MirrorReport {
    bool applicable = false; // false when phi lies outside the mirror class
    MirrorBranch branch = MirrorBranch::none;
    typename ScalarTraits<S>::Prob max_residual{};
};

namespace detail {

// Largest norm over k of Psi_k - (-1)^n (sign i) J Psi_{-k} at one time slice.
template <class S>
typename ScalarTraits<S>::Prob mirror_residual(const WalkState<S>& s, int sign) {
    using T = ScalarTraits<S>;
    static const Mat2<S> J = coin_constant<S>(Coin::J);
    S factor = T::make(0, sign);
    if (s.time % 2 != 0)
        factor = -factor;
    auto worst = T::prob_zero();
    auto consider = [&worst](const typename ScalarTraits<S>::Prob& r) {
        if (T::prob_to_double(r) > T::prob_to_double(worst))
            worst = r;
    };
    for (const auto& [k, v] : s.sites) {
        Vec2<S> mirrored;
        if (auto it = s.sites.find(-k); it != s.sites.end())
            mirrored = it->second;
        Vec2<S> jm = J * mirrored;
        consider((v - Vec2<S>(jm.left * factor, jm.right * factor)).norm_sq());
    }
    return worst;
}

} // namespace detail

// Residual of the mirror identity Psi_k = (-1)^n (+/- i) J Psi_{-k} at time n.
// Exactly zero for mirror-class states; for anything else the identity has
// no preferred sign, so we report the better of the two and mark it as
// not applicable.
template <class S>
MirrorReport<S> mirror_report(const QubitState<S>& phi, int n) {
    using T = ScalarTraits<S>;
    MirrorReport<S> rep;
    rep.branch = mirror_branch(phi);
    rep.applicable = rep.branch != MirrorBranch::none;
    WalkState<S> s = evolve(phi, n);
    if (rep.applicable) {
        rep.max_residual =
            detail::mirror_residual(s, rep.branch == MirrorBranch::plus ? 1 : -1);
    } else {
        auto plus = detail::mirror_residual(s, 1);
        auto minus = detail::mirror_residual(s, -1);
        rep.max_residual =
            T::prob_to_double(plus) < T::prob_to_double(minus) ? plus : minus;
    }
    return rep;
}

// Worst residual over all time slices n = 0..n_max (one incremental evolution).
template <class S>
MirrorReport<S> mirror_report_to(const QubitState<S>& phi, int n_max) {
    using T = ScalarTraits<S>;
    MirrorReport<S> rep;
    rep.branch = mirror_branch(phi);
    rep.applicable = rep.branch != MirrorBranch::none;
    int sign = rep.branch == MirrorBranch::minus ? -1 : 1;
    WalkState<S> s = initial_state(phi);
    rep.max_residual = detail::mirror_residual(s, sign);
    for (int n = 1; n <= n_max; ++n) {
        s = step(s);
        auto r = detail::mirror_residual(s, sign);
        if (T::prob_to_double(r) > T::prob_to_double(rep.max_residual))
            rep.max_residual = r;
    }
    return rep;
}

namespace detail {

template <class S>
bool slice_symmetric(const WalkState<S>& s) {
    using T = ScalarTraits<S>;
    for (const auto& [k, v] : s.sites) {
        if (k < 0)
            continue;
        auto mirror = T::prob_zero();
        if (auto it = s.sites.find(-k); it != s.sites.end())
            mirror = it->second.norm_sq();
        if (!T::prob_is_zero(v.norm_sq() - mirror))
            return false;
    }
    // sites present only on the negative side
    for (const auto& [k, v] : s.sites) {
        if (k < 0 && s.sites.find(-k) == s.sites.end() &&
            !T::prob_is_zero(v.norm_sq()))
            return false;
    }
    return true;
}

} // namespace detail

template <class S>
bool is_symmetric_to(const QubitState<S>& phi, int n_max) {
    WalkState<S> s = initial_state(phi);
    for (int n = 1; n <= n_max; ++n) {
        s = step(s);
        if (!detail::slice_symmetric(s))
            return false;
    }
    return true;
}

template <class S>
bool is_zero_mean_to(const QubitState<S>& phi, int n_max) {
    using T = ScalarTraits<S>;
    WalkState<S> s = initial_state(phi);
    for (int n = 1; n <= n_max; ++n) {
        s = step(s);
        if (!T::prob_is_zero(expectation(s)))
            return false;
    }
    return true;
}

/**
 * The three class memberships of one initial state, each tested to the
 * horizon. The mirror class is decided exactly; the symmetry and zero-mean
 * classes are infinite-horizon notions probed up to n_max, which is enough:
 * states outside the mirror class reveal themselves by n = 3.
 */
struct ClassLabel {
    bool in_perp = false;
    bool symmetric_to_horizon = false;
    bool zero_mean_to_horizon = false;
    int horizon = 0;
    int first_violation_n = -1; // earliest slice where either probe failed

    bool agree() const {
        return in_perp == symmetric_to_horizon && in_perp == zero_mean_to_horizon;
    }
};

template <class S>
ClassLabel classify(const QubitState<S>& phi, int n_max) {
    using T = ScalarTraits<S>;
    ClassLabel label;
    label.in_perp = is_perp(phi);
    label.horizon = n_max;
    label.symmetric_to_horizon = true;
    label.zero_mean_to_horizon = true;
    WalkState<S> s = initial_state(phi);
    for (int n = 1; n <= n_max; ++n) {
        s = step(s);
        bool sym = label.symmetric_to_horizon && detail::slice_symmetric(s);
        bool zm = label.zero_mean_to_horizon && T::prob_is_zero(expectation(s));
        if ((!sym || !zm) && label.first_violation_n < 0)
            label.first_violation_n = n;
        label.symmetric_to_horizon = label.symmetric_to_horizon && sym;
        label.zero_mean_to_horizon = label.zero_mean_to_horizon && zm;
        // nothing new can happen once both probes have failed
        if (!label.symmetric_to_horizon && !label.zero_mean_to_horizon)
            break;
    }
    return label;
}

template <class S>
std::vector<ClassLabel> sweep_classes(const std::vector<QubitState<S>>& states,
                                       int n_max) {
    std::vector<ClassLabel> out;
    out.reserve(states.size());
    for (const auto& phi : states)
        out.push_back(classify(phi, n_max));
    return out;
}

/**
 * Every normalized state with exactly representable amplitudes of matching
 * sqrt(2) parity — all 48 of them. Normalization forces the four integer
 * components to be a representation of 2^s as a sum of four squares, and
 * powers of two admit only the trivial ones, so the exact state space is
 * finite: the coordinate axes and the rays (1, +-1)/sqrt2, (1, +-i)/sqrt2,
 * each dressed with the eight exact unit phases. Both mirror branches and
 * all asymmetric rays appear, which makes this the canonical sweep set.
 */
inline std::vector<QubitState<DyadicGaussian>> exact_state_space() {
    using DG = DyadicGaussian;
    std::vector<QubitState<DG>> all;
    all.reserve(48);
    std::vector<DG> unit8 = {DG(1),       DG(-1),       DG(0, 1),    DG(0, -1),
                             DG(1, 1, 1), DG(1, -1, 1), DG(-1, 1, 1), DG(-1, -1, 1)};
    for (const auto& u : unit8) {
        all.push_back({u, DG()});
        all.push_back({DG(), u});
    }
    std::vector<DG> quarter = {DG(1), DG(-1), DG(0, 1), DG(0, -1)};
    const DG omega(1, 1, 1); // the odd phase that reaches the other parity
    for (const auto& za : quarter)
        for (const auto& zb : quarter) {
            all.push_back({za.div_sqrt2(), zb.div_sqrt2()});
            all.push_back({(za * omega).div_sqrt2(), (zb * omega).div_sqrt2()});
        }
    return all;
}

} // namespace hadwalk
