#include "ll/prover_mll.hpp"

#include <cstdint>
#include <unordered_set>

namespace ll {

namespace {

bool is_literal(const Formula& f) {
    switch (f.conn()) {
        case Conn::Atom:
        case Conn::DualAtom:
        case Conn::One:
        case Conn::Bot:
            return true;
        case Conn::Dual:
            // literal NNF keeps dual only over units
            return true;
        default:
            return false;
    }
}

struct Search {
    Calculus calc;
    bool budget_hit = false;
    std::unordered_set<std::string> failed;

    static std::string key(const Multiset& ms, int budget) {
        return std::to_string(budget) + "|" + ms.pretty();
    }

    // Backward search. Budget caps contraction steps on the current branch.
    // Rule order: leaves, contraction, invertibles (committed), tensor, mix.
    // Contraction comes before the invertibles so that minimal contraction
    // proofs keep (C) at the root, as in the hand proof of |- bot.
    std::optional<ProofTree> search(const Multiset& ms, int budget) {
        std::string k = key(ms, budget);
        if (failed.count(k)) return std::nullopt;
        std::optional<ProofTree> r = expand(ms, budget);
        if (!r) failed.insert(k);
        return r;
    }

    std::optional<ProofTree> expand(const Multiset& ms, int budget) {
        Sequent here{Multiset{}, ms};

        // leaves
        if (ms.empty()) {
            if (calc.empty_seq) return ProofTree{here, Rule::Empty, {}};
            return std::nullopt;  // nothing else applies to the empty sequent
        }
        if (ms.size() == 1 && ms.items()[0].conn() == Conn::One)
            return ProofTree{here, Rule::One, {}};
        if (ms.size() == 2) {
            const Formula& x = ms.items()[0];
            const Formula& y = ms.items()[1];
            if (is_literal(x) && literal_dual(x) == y)
                return ProofTree{here, Rule::Ax, {}};
        }

        // contraction
        if (calc.contraction) {
            if (budget > 0) {
                if (auto p = search(ms.plus(Formula::one()), budget - 1))
                    return ProofTree{here, Rule::Contraction, {*p}};
            } else {
                budget_hit = true;
            }
        }

        // invertibles, applied eagerly on the first match in canonical order
        if (ms.contains(Formula::bot())) {
            if (auto p = search(ms.removed(Formula::bot()), budget))
                return ProofTree{here, Rule::Bot, {*p}};
            return std::nullopt;
        }
        for (const auto& f : ms.items()) {
            if (f.conn() != Conn::Par) continue;
            Multiset next = ms.removed(f).plus(f.left()).plus(f.right());
            if (auto p = search(next, budget))
                return ProofTree{here, Rule::Par, {*p}};
            return std::nullopt;
        }

        // tensor: backtrack over the principal formula and all context splits
        const auto& items = ms.items();
        for (std::size_t ti = 0; ti < items.size(); ++ti) {
            const Formula& t = items[ti];
            if (t.conn() != Conn::Tensor) continue;
            if (ti > 0 && items[ti] == items[ti - 1]) continue;  // dup principal
            Multiset rest = ms.removed(t);
            std::size_t n = rest.size();
            for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
                std::vector<Formula> ls{t.left()}, rs{t.right()};
                for (std::size_t i = 0; i < n; ++i)
                    (mask >> i & 1 ? ls : rs).push_back(rest.items()[i]);
                auto p1 = search(Multiset(std::move(ls)), budget);
                if (!p1) continue;
                auto p2 = search(Multiset(std::move(rs)), budget);
                if (!p2) continue;
                return ProofTree{here, Rule::Tensor, {*p1, *p2}};
            }
        }

        // mix: split into two nonempty parts; the empty-part variant is
        // subsumed by the empty-sequent leaf when that rule is on
        if (calc.mix && ms.size() >= 2) {
            std::size_t n = ms.size();
            for (std::uint64_t mask = 1; mask < (1ull << n) - 1; mask += 2) {
                // bit 0 always in the left part, so each split is seen once
                std::vector<Formula> ls, rs;
                for (std::size_t i = 0; i < n; ++i)
                    (mask >> i & 1 ? ls : rs).push_back(ms.items()[i]);
                auto p1 = search(Multiset(std::move(ls)), budget);
                if (!p1) continue;
                auto p2 = search(Multiset(std::move(rs)), budget);
                if (!p2) continue;
                return ProofTree{here, Rule::Mix, {*p1, *p2}};
            }
        }

        return std::nullopt;
    }
};

}  // namespace

Verdict prove(const Sequent& s, const Calculus& calc, const SearchConfig& cfg) {
    calc.validate();
    if (calc.base != CalculusBase::MLL)
        throw DomainError("prove: MLL-family calculus required");
    if (!s.one_sided())
        throw DomainError("prove: one-sided sequent required");

    std::vector<Formula> nnf;
    for (const auto& f : s.succedent.items()) nnf.push_back(to_literal_nnf(f));
    Multiset goal(std::move(nnf));

    int max_budget = 0;
    if (calc.contraction) {
        max_budget = cfg.c_budget.value_or(
            2 * static_cast<int>(std::max<std::size_t>(goal.node_count(), 1)));
        if (max_budget < 0) max_budget = 0;
    }

    // Iterative deepening over contraction steps keeps found proofs minimal
    // in (C) applications.
    bool hit = false;
    for (int budget = 0; budget <= max_budget; ++budget) {
        Search search{calc};
        auto proof = search.search(goal, budget);
        if (proof) {
            auto violations = validate_proof(*proof, calc);
            if (!violations.empty())
                throw std::logic_error("prover produced an invalid proof: " +
                                       violations.front().message);
            return Verdict{Verdict::Kind::Provable, std::move(proof), ""};
        }
        hit = search.budget_hit;
        if (!calc.contraction) break;
    }

    if (calc.contraction && hit)
        return Verdict{Verdict::Kind::Unknown, std::nullopt, "c-budget exhausted"};
    return Verdict{Verdict::Kind::NotProvable, std::nullopt, ""};
}

Equiprovability decide_equiprovable(const Sequent& s1, const Sequent& s2,
                                    const Calculus& calc) {
    Equiprovability out;
    out.first = prove(s1, calc);
    out.second = prove(s2, calc);
    out.agree = out.first.kind != Verdict::Kind::Unknown &&
                out.first.kind == out.second.kind;
    return out;
}

}  // namespace ll
