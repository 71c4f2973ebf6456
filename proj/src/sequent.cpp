#include "ll/sequent.hpp"

#include <algorithm>

namespace ll {

Multiset::Multiset(std::vector<Formula> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
}

Multiset::Multiset(std::initializer_list<Formula> items)
    : Multiset(std::vector<Formula>(items)) {}

bool Multiset::contains(const Formula& f) const {
    return std::binary_search(items_.begin(), items_.end(), f);
}

std::size_t Multiset::multiplicity(const Formula& f) const {
    auto [lo, hi] = std::equal_range(items_.begin(), items_.end(), f);
    return static_cast<std::size_t>(hi - lo);
}

Multiset Multiset::plus(const Formula& f) const {
    Multiset out = *this;
    out.items_.insert(
        std::upper_bound(out.items_.begin(), out.items_.end(), f), f);
    return out;
}

Multiset Multiset::removed(const Formula& f) const {
    auto it = std::lower_bound(items_.begin(), items_.end(), f);
    if (it == items_.end() || *it != f)
        throw DomainError("multiset remove: formula absent: " + f.pretty());
    Multiset out = *this;
    out.items_.erase(out.items_.begin() + (it - items_.begin()));
    return out;
}

std::size_t Multiset::node_count() const {
    std::size_t n = 0;
    for (const auto& f : items_) n += f.node_count();
    return n;
}

std::string Multiset::pretty() const {
    std::string out;
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) out += ", ";
        out += items_[i].pretty();
    }
    return out;
}

Multiset mset_union(const Multiset& a, const Multiset& b) {
    std::vector<Formula> merged;
    merged.reserve(a.size() + b.size());
    std::merge(a.items().begin(), a.items().end(), b.items().begin(),
               b.items().end(), std::back_inserter(merged));
    return Multiset(std::move(merged));
}

Multiset mset_remove(const Multiset& a, const Formula& f) { return a.removed(f); }

std::string Sequent::pretty() const {
    std::string out = antecedent.pretty();
    if (!antecedent.empty()) out += ' ';
    out += "|-";
    if (!succedent.empty()) out += ' ';
    out += succedent.pretty();
    return out;
}

void Calculus::validate() const {
    if (base == CalculusBase::MILL) {
        if (mix || contraction || empty_seq)
            throw DomainError("MILL admits no extensions");
        return;
    }
    if ((contraction || empty_seq) && !mix)
        throw DomainError(
            "contraction and the empty-sequent rule require MLL+Mix");
}

std::string Calculus::name() const {
    if (base == CalculusBase::MILL) return "mill";
    std::string out = "mll";
    if (mix) out += "-mix";
    if (contraction) out += "-c";
    if (empty_seq) out += "-empty";
    return out;
}

}  // namespace ll
