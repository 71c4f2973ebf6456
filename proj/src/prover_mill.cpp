#include "ll/prover_mill.hpp"

#include <cstdint>
#include <unordered_set>

namespace ll {

namespace {

struct Search {
    std::unordered_set<std::string> failed;

    static std::string key(const Sequent& s) { return s.pretty(); }

    std::optional<ProofTree> search(const Sequent& s) {
        std::string k = key(s);
        if (failed.count(k)) return std::nullopt;
        std::optional<ProofTree> r = expand(s);
        if (!r) failed.insert(k);
        return r;
    }

    std::optional<ProofTree> expand(const Sequent& s) {
        const Formula goal = s.succedent.items()[0];

        // leaves
        if (s.antecedent.empty() && goal.conn() == Conn::UnitI)
            return ProofTree{s, Rule::MillUnitRight, {}};
        if (goal.conn() == Conn::Atom && s.antecedent.size() == 1 &&
            s.antecedent.items()[0] == goal)
            return ProofTree{s, Rule::MillAx, {}};

        // invertibles, committed: lolli-right, then tensor-left, then i-left
        if (goal.conn() == Conn::Lollipop) {
            Sequent next{s.antecedent.plus(goal.left()), Multiset{goal.right()}};
            if (auto p = search(next))
                return ProofTree{s, Rule::MillLolliRight, {*p}};
            return std::nullopt;
        }
        for (const auto& f : s.antecedent.items()) {
            if (f.conn() != Conn::Tensor) continue;
            Sequent next{s.antecedent.removed(f).plus(f.left()).plus(f.right()),
                         s.succedent};
            if (auto p = search(next))
                return ProofTree{s, Rule::MillTensorLeft, {*p}};
            return std::nullopt;
        }
        if (s.antecedent.contains(Formula::unit_i())) {
            Sequent next{s.antecedent.removed(Formula::unit_i()), s.succedent};
            if (auto p = search(next))
                return ProofTree{s, Rule::MillUnitLeft, {*p}};
            return std::nullopt;
        }

        // tensor-right: backtrack over context splits
        if (goal.conn() == Conn::Tensor) {
            std::size_t n = s.antecedent.size();
            for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
                std::vector<Formula> ls, rs;
                for (std::size_t i = 0; i < n; ++i)
                    (mask >> i & 1 ? ls : rs).push_back(s.antecedent.items()[i]);
                auto p1 = search({Multiset(std::move(ls)), Multiset{goal.left()}});
                if (!p1) continue;
                auto p2 = search({Multiset(std::move(rs)), Multiset{goal.right()}});
                if (!p2) continue;
                return ProofTree{s, Rule::MillTensorRight, {*p1, *p2}};
            }
        }

        // lolli-left: backtrack over the principal lollipop and splits
        const auto& items = s.antecedent.items();
        for (std::size_t li = 0; li < items.size(); ++li) {
            const Formula& l = items[li];
            if (l.conn() != Conn::Lollipop) continue;
            if (li > 0 && items[li] == items[li - 1]) continue;
            Multiset rest = s.antecedent.removed(l);
            std::size_t n = rest.size();
            for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
                std::vector<Formula> ls, rs;
                for (std::size_t i = 0; i < n; ++i)
                    (mask >> i & 1 ? ls : rs).push_back(rest.items()[i]);
                auto p1 = search({Multiset(std::move(ls)), Multiset{l.left()}});
                if (!p1) continue;
                Multiset right_ctx = Multiset(std::move(rs)).plus(l.right());
                auto p2 = search({right_ctx, s.succedent});
                if (!p2) continue;
                return ProofTree{s, Rule::MillLolliLeft, {*p1, *p2}};
            }
        }

        return std::nullopt;
    }
};

}  // namespace

Verdict prove_mill(const Sequent& s, const SearchConfig&) {
    if (s.succedent.size() != 1)
        throw DomainError("prove_mill: exactly one succedent formula required");
    for (const auto& f : s.antecedent.items())
        if (!is_mill_expanded(f))
            throw DomainError("prove_mill: not in MILL-expanded form: " +
                              f.pretty());
    if (!is_mill_expanded(s.succedent.items()[0]))
        throw DomainError("prove_mill: not in MILL-expanded form: " +
                          s.succedent.items()[0].pretty());

    Search search;
    auto proof = search.search(s);
    if (proof) {
        auto violations = validate_proof(*proof, Calculus::mill());
        if (!violations.empty())
            throw std::logic_error("prover produced an invalid proof: " +
                                   violations.front().message);
        return Verdict{Verdict::Kind::Provable, std::move(proof), ""};
    }
    return Verdict{Verdict::Kind::NotProvable, std::nullopt, ""};
}

Verdict check_entailment(const Formula& lhs, const Formula& rhs) {
    return prove_mill(
        Sequent{Multiset{expand_defs(lhs)}, Multiset{expand_defs(rhs)}});
}

}  // namespace ll
