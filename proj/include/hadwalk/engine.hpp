#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hadwalk/coin.hpp"

namespace hadwalk {

// The initial qubit: amplitudes of |L> and |R> at the origin.
template <class S>
using QubitState = Vec2<S>;

/**
 * Sparse state of the walk on the integer line. Only sites with a nonzero
 * amplitude pair appear in the map, so the support grows with the wave
 * front instead of with a preallocated lattice.
 */
template <class S>
struct WalkState {
    int time = 0;
    std::map<int, Vec2<S>> sites;

    typename ScalarTraits<S>::Prob total_probability() const {
        auto p = ScalarTraits<S>::prob_zero();
        for (const auto& [k, v] : sites)
            p += v.norm_sq();
        return p;
    }
};

template <class S>
struct SiteProb {
    int k = 0;
    typename ScalarTraits<S>::Prob pL{};
    typename ScalarTraits<S>::Prob pR{};
    typename ScalarTraits<S>::Prob p{};
};

template <class S>
struct Distribution {
    int time = 0;
    std::vector<SiteProb<S>> sites; // ascending k

    typename ScalarTraits<S>::Prob total() const {
        auto t = ScalarTraits<S>::prob_zero();
        for (const auto& s : sites)
            t += s.p;
        return t;
    }
};

template <class S>
WalkState<S> initial_state(const QubitState<S>& phi) {
    using T = ScalarTraits<S>;
    auto defect = phi.norm_sq() - T::prob_one();
    if (!T::prob_is_zero(defect))
        throw std::domain_error("initial qubit state is not normalized");
    if (!T::parity_compatible(phi.left, phi.right))
        throw std::domain_error(
            "qubit amplitudes mix even and odd powers of 1/sqrt(2); "
            "evolution would leave the exact ring (use the float backend)");
    WalkState<S> s;
    s.time = 0;
    if (!phi.is_zero())
        s.sites.emplace(0, phi);
    return s;
}

// One time step: the new amplitude at site k collects Q applied to the
// left neighbor and P applied to the right neighbor. Sites whose pair
// comes out identically zero are dropped to keep the support tight.
template <class S>
WalkState<S> step(const WalkState<S>& s) {
    static const Mat2<S> P = coin_constant<S>(Coin::P);
    static const Mat2<S> Q = coin_constant<S>(Coin::Q);
    WalkState<S> out;
    out.time = s.time + 1;
    for (const auto& [k, v] : s.sites) {
        auto add = [&out](int site, Vec2<S> contrib) {
            auto it = out.sites.find(site);
            if (it == out.sites.end())
                out.sites.emplace(site, std::move(contrib));
            else
                it->second += contrib;
        };
        add(k + 1, Q * v);
        add(k - 1, P * v);
    }
    for (auto it = out.sites.begin(); it != out.sites.end();) {
        if (it->second.is_zero())
            it = out.sites.erase(it);
        else
            ++it;
    }
    return out;
}

template <class S>
WalkState<S> evolve(const WalkState<S>& start, int n_steps) {
    if (n_steps < 0)
        throw std::domain_error("cannot evolve backwards");
    WalkState<S> s = start;
    for (int i = 0; i < n_steps; ++i)
        s = step(s);
    return s;
}

template <class S>
WalkState<S> evolve(const QubitState<S>& phi, int n) {
    return evolve(initial_state(phi), n);
}

template <class S>
Distribution<S> distribution(const WalkState<S>& s) {
    using T = ScalarTraits<S>;
    Distribution<S> d;
    d.time = s.time;
    d.sites.reserve(s.sites.size());
    for (const auto& [k, v] : s.sites) {
        SiteProb<S> sp;
        sp.k = k;
        sp.pL = T::norm_sq(v.left);
        sp.pR = T::norm_sq(v.right);
        sp.p = sp.pL + sp.pR;
        d.sites.push_back(std::move(sp));
    }
    return d;
}

template <class S>
typename ScalarTraits<S>::Prob expectation(const WalkState<S>& s) {
    auto e = ScalarTraits<S>::prob_zero();
    for (const auto& [k, v] : s.sites)
        e += v.norm_sq() * k;
    return e;
}

/**
 * The same coin dynamics on the (2N+1)-cycle, sites -N..N with periodic
 * wrap. Kept separate from the line engine: for n < N the wave front
 * never reaches the seam and the two agree exactly, beyond that the
 * cycle folds the front back on itself (still unitary).
 */
struct CirculantOperator {
    int half_size = 1; // N; the cycle has 2N+1 sites

    explicit CirculantOperator(int N) : half_size(N) {
        if (N < 1)
            throw std::domain_error("circulant needs at least a 3-site cycle");
    }

    template <class S>
    WalkState<S> apply(const WalkState<S>& s) const {
        const int N = half_size;
        const int M = 2 * N + 1;
        static const Mat2<S> P = coin_constant<S>(Coin::P);
        static const Mat2<S> Q = coin_constant<S>(Coin::Q);
        WalkState<S> out;
        out.time = s.time + 1;
        auto wrap = [N, M](int k) {
            int r = (k + N) % M;
            if (r < 0)
                r += M;
            return r - N;
        };
        for (const auto& [k, v] : s.sites) {
            auto add = [&out](int site, Vec2<S> contrib) {
                auto it = out.sites.find(site);
                if (it == out.sites.end())
                    out.sites.emplace(site, std::move(contrib));
                else
                    it->second += contrib;
            };
            add(wrap(k + 1), Q * v);
            add(wrap(k - 1), P * v);
        }
        for (auto it = out.sites.begin(); it != out.sites.end();) {
            if (it->second.is_zero())
                it = out.sites.erase(it);
            else
                ++it;
        }
        return out;
    }
};

template <class S>
WalkState<S> evolve_circulant(const QubitState<S>& phi, int n, int N) {
    if (n < 0)
        throw std::domain_error("cannot evolve backwards");
    CirculantOperator op(N);
    WalkState<S> s = initial_state(phi);
    for (int i = 0; i < n; ++i)
        s = op.apply<S>(s);
    return s;
}

} // namespace hadwalk
