#pragma once

// Seeded random generators shared by the test binaries.

#include <random>
#include <string>
#include <vector>

#include "ll/formula.hpp"
#include "ll/sequent.hpp"

namespace gen {

inline ll::Formula random_mll_nnf(std::mt19937& rng, int max_size) {
    if (max_size <= 1) {
        switch (rng() % 6) {
            case 0: return ll::Formula::atom("a");
            case 1: return ll::Formula::atom("b");
            case 2: return ll::Formula::dual_atom("a");
            case 3: return ll::Formula::dual_atom("b");
            case 4: return ll::Formula::one();
            default: return ll::Formula::bot();
        }
    }
    if (rng() % 3 == 0) return random_mll_nnf(rng, 1);
    int left = 1 + static_cast<int>(rng() % (max_size - 1));
    ll::Formula l = random_mll_nnf(rng, left);
    ll::Formula r = random_mll_nnf(rng, max_size - 1 - left);
    return rng() % 2 ? ll::Formula::tensor(l, r) : ll::Formula::par(l, r);
}

// Arbitrary surface-syntax formula, including duals and lollipops. Stays in
// the parser's image: dual atoms appear as Dual(Atom), never as DualAtom.
inline ll::Formula random_formula(std::mt19937& rng, int depth) {
    if (depth <= 0 || rng() % 4 == 0) {
        switch (rng() % 7) {
            case 0: return ll::Formula::atom("a");
            case 1: return ll::Formula::atom("b");
            case 2: return ll::Formula::atom("xy");
            case 3: return ll::Formula::one();
            case 4: return ll::Formula::bot();
            case 5: return ll::Formula::unit_i();
            default: return ll::Formula::dual(ll::Formula::atom("c"));
        }
    }
    switch (rng() % 4) {
        case 0:
            return ll::Formula::dual(random_formula(rng, depth - 1));
        case 1:
            return ll::Formula::tensor(random_formula(rng, depth - 1),
                                       random_formula(rng, depth - 1));
        case 2:
            return ll::Formula::par(random_formula(rng, depth - 1),
                                    random_formula(rng, depth - 1));
        default:
            return ll::Formula::lollipop(random_formula(rng, depth - 1),
                                         random_formula(rng, depth - 1));
    }
}

inline ll::Sequent random_one_sided(std::mt19937& rng, int width, int size) {
    std::vector<ll::Formula> items;
    int n = 1 + static_cast<int>(rng() % width);
    for (int i = 0; i < n; ++i) items.push_back(random_mll_nnf(rng, size));
    return ll::Sequent{{}, ll::Multiset(items)};
}

// One-sided sequent over parser-producible formulas (for round trips).
inline ll::Sequent random_surface_sequent(std::mt19937& rng, int width,
                                          int depth) {
    std::vector<ll::Formula> items;
    int n = 1 + static_cast<int>(rng() % width);
    for (int i = 0; i < n; ++i) items.push_back(random_formula(rng, depth));
    return ll::Sequent{{}, ll::Multiset(items)};
}

/// All MLL-NNF formulas over atoms a, b up to the given node count.
inline std::vector<ll::Formula> enumerate_mll_nnf(int max_size) {
    std::vector<std::vector<ll::Formula>> by_size(max_size + 1);
    if (max_size >= 1)
        by_size[1] = {ll::Formula::atom("a"),      ll::Formula::atom("b"),
                      ll::Formula::dual_atom("a"), ll::Formula::dual_atom("b"),
                      ll::Formula::one(),          ll::Formula::bot()};
    for (int n = 2; n <= max_size; ++n)
        for (int l = 1; l < n - 1; ++l)
            for (const auto& a : by_size[l])
                for (const auto& b : by_size[n - 1 - l]) {
                    by_size[n].push_back(ll::Formula::tensor(a, b));
                    by_size[n].push_back(ll::Formula::par(a, b));
                }
    std::vector<ll::Formula> all;
    for (const auto& v : by_size) all.insert(all.end(), v.begin(), v.end());
    return all;
}

}  // namespace gen
