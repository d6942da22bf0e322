#pragma once

// Independent reference implementations for cross-checking the library.
// Everything here favors obviousness over speed: path sums enumerate every
// coin word, cluster counts enumerate every composition. None of it calls
// the code under test beyond the scalar/matrix primitives.

#include <random>
#include <vector>

#include "hadwalk/engine.hpp"
#include "hadwalk/pascal.hpp"
#include "hadwalk/symmetry.hpp"

namespace oracles {

using namespace hadwalk;

// Walk state after n steps, rebuilt as a global sum over all 2^n coin
// words: word bit = 1 moves right (Q), bit = 0 moves left (P). The product
// is applied right-to-left in time, i.e. the step-1 matrix acts first.
template <class S>
WalkState<S> path_sum_evolve(const QubitState<S>& phi, int n) {
    const Mat2<S> P = coin_constant<S>(Coin::P);
    const Mat2<S> Q = coin_constant<S>(Coin::Q);
    WalkState<S> out;
    out.time = n;
    for (unsigned long word = 0; word < (1ul << n); ++word) {
        Vec2<S> v = phi;
        int site = 0;
        for (int t = 0; t < n; ++t) {
            if (word >> t & 1ul) {
                v = Q * v;
                site += 1;
            } else {
                v = P * v;
                site -= 1;
            }
        }
        auto it = out.sites.find(site);
        if (it == out.sites.end())
            out.sites.emplace(site, v);
        else
            it->second += v;
    }
    for (auto it = out.sites.begin(); it != out.sites.end();) {
        if (it->second.is_zero())
            it = out.sites.erase(it);
        else
            ++it;
    }
    return out;
}

// Number of words with l P's and m Q's that collapse to the given letter
// with the given cluster count, by brute enumeration. A word is scanned
// into runs; its collapsed letter follows from which letter opens and
// which closes it (P...P -> P, P...Q -> R, Q...P -> S, Q...Q -> Q).
inline long count_words(Coin kind, long l, long m, long clusters) {
    long n = l + m;
    long count = 0;
    for (unsigned long word = 0; word < (1ul << n); ++word) {
        if (__builtin_popcountl(word) != m)
            continue;
        long runs = 1;
        for (long t = 1; t < n; ++t)
            if (((word >> t) & 1ul) != ((word >> (t - 1)) & 1ul))
                ++runs;
        bool first_q = word & 1ul;
        bool last_q = (word >> (n - 1)) & 1ul;
        // leftmost letter of the written word is the LAST bit scanned here;
        // collapsed letter depends only on the outer letters
        Coin collapsed;
        if (!last_q && !first_q) collapsed = Coin::P;
        else if (!last_q && first_q) collapsed = Coin::R;
        else if (last_q && !first_q) collapsed = Coin::S;
        else collapsed = Coin::Q;
        if (collapsed == kind && runs == clusters)
            ++count;
    }
    return count;
}

// Deterministic sample (with repetition) from the library's 48-element
// exact state space.
inline std::vector<QubitState<DyadicGaussian>> sample_exact_states(std::size_t count,
                                                                   unsigned seed) {
    auto space = exact_state_space();
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, space.size() - 1);
    std::vector<QubitState<DyadicGaussian>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(space[pick(rng)]);
    return out;
}

// Random normalized float states, for backend-agreement checks.
inline std::vector<QubitState<ComplexF>> sample_float_states(std::size_t count,
                                                             unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<QubitState<ComplexF>> out;
    out.reserve(count);
    while (out.size() < count) {
        ComplexF a(u(rng), u(rng)), b(u(rng), u(rng));
        double norm = std::sqrt(std::norm(a) + std::norm(b));
        if (norm < 1e-3)
            continue;
        out.push_back({a / norm, b / norm});
    }
    return out;
}

} // namespace oracles
