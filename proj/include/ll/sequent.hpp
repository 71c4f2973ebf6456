#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ll/formula.hpp"

namespace ll {

/// Finite bag of formulas kept in canonical sorted order, multiplicities
/// represented by repetition. Equality is permutation-invariant and
/// multiplicity-sensitive.
class Multiset {
public:
    Multiset() = default;
    explicit Multiset(std::vector<Formula> items);
    Multiset(std::initializer_list<Formula> items);

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const std::vector<Formula>& items() const { return items_; }

    bool contains(const Formula& f) const;
    std::size_t multiplicity(const Formula& f) const;

    Multiset plus(const Formula& f) const;
    /// Removes one occurrence; throws DomainError if absent.
    Multiset removed(const Formula& f) const;

    std::size_t node_count() const;

    bool operator==(const Multiset& o) const { return items_ == o.items_; }
    bool operator!=(const Multiset& o) const { return !(*this == o); }

    std::string pretty() const;  // comma-separated, canonical order

private:
    std::vector<Formula> items_;
};

Multiset mset_union(const Multiset& a, const Multiset& b);
Multiset mset_remove(const Multiset& a, const Formula& f);

struct Sequent {
    Multiset antecedent;
    Multiset succedent;

    bool one_sided() const { return antecedent.empty(); }

    bool operator==(const Sequent& o) const {
        return antecedent == o.antecedent && succedent == o.succedent;
    }
    bool operator!=(const Sequent& o) const { return !(*this == o); }

    std::string pretty() const;
};

enum class CalculusBase { MLL, MILL };

/// A base calculus plus the extensions studied on top of it. Contraction and
/// the empty-sequent rule only make sense over MLL+Mix; MILL admits no
/// extensions.
struct Calculus {
    CalculusBase base = CalculusBase::MLL;
    bool mix = false;
    bool contraction = false;
    bool empty_seq = false;

    static Calculus mll() { return {CalculusBase::MLL, false, false, false}; }
    static Calculus mll_mix() { return {CalculusBase::MLL, true, false, false}; }
    static Calculus mll_mix_c() { return {CalculusBase::MLL, true, true, false}; }
    static Calculus mll_mix_empty() { return {CalculusBase::MLL, true, false, true}; }
    static Calculus mill() { return {CalculusBase::MILL, false, false, false}; }

    /// Throws DomainError on unsupported combinations.
    void validate() const;

    std::string name() const;
};

}  // namespace ll
