#include "ll/rule_checker.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <set>
#include <unordered_set>

#include "ll/prover_mll.hpp"

namespace ll {

std::string RuleVerdict::str() const {
    switch (kind) {
        case Kind::Derivable: return "derivable";
        case Kind::NotDerivable: return "not-derivable";
        case Kind::Unknown:
            return reason.empty() ? "unknown" : "unknown (" + reason + ")";
    }
    return "?";
}

namespace {

void collect_atom_names(const Formula& f, std::set<std::string>& out) {
    switch (f.conn()) {
        case Conn::Atom:
        case Conn::DualAtom:
            out.insert(f.name());
            return;
        case Conn::Dual:
            collect_atom_names(f.child(), out);
            return;
        case Conn::Tensor:
        case Conn::Par:
        case Conn::Lollipop:
            collect_atom_names(f.left(), out);
            collect_atom_names(f.right(), out);
            return;
        default:
            return;
    }
}

void collect_subformulas(const Formula& f, std::set<Formula>& out) {
    out.insert(f);
    switch (f.conn()) {
        case Conn::Dual:
            collect_subformulas(f.child(), out);
            return;
        case Conn::Tensor:
        case Conn::Par:
        case Conn::Lollipop:
            collect_subformulas(f.left(), out);
            collect_subformulas(f.right(), out);
            return;
        default:
            return;
    }
}

struct Search {
    Calculus calc;
    std::vector<Sequent> hypotheses;
    std::vector<Formula> cut_candidates;
    std::unordered_set<std::string> ctx_atoms;
    bool budget_hit = false;
    std::unordered_set<std::string> failed;

    bool is_ctx(const Formula& f) const {
        return (f.conn() == Conn::Atom || f.conn() == Conn::DualAtom) &&
               ctx_atoms.count(f.name()) > 0;
    }

    std::optional<ProofTree> search(const Multiset& ms, int cut_budget) {
        std::string k = std::to_string(cut_budget) + "|" + ms.pretty();
        if (failed.count(k)) return std::nullopt;
        auto r = expand(ms, cut_budget);
        if (!r) failed.insert(k);
        return r;
    }

    std::optional<ProofTree> expand(const Multiset& ms, int cut_budget) {
        Sequent here{Multiset{}, ms};

        for (const auto& h : hypotheses)
            if (h.succedent == ms) return ProofTree{here, Rule::Hypothesis, {}};

        if (ms.empty()) {
            if (calc.empty_seq) return ProofTree{here, Rule::Empty, {}};
            return std::nullopt;
        }
        if (ms.size() == 1 && ms.items()[0].conn() == Conn::One)
            return ProofTree{here, Rule::One, {}};
        if (ms.size() == 2) {
            const Formula& x = ms.items()[0];
            const Formula& y = ms.items()[1];
            bool lit = x.conn() == Conn::Atom || x.conn() == Conn::DualAtom ||
                       x.conn() == Conn::One || x.conn() == Conn::Bot ||
                       x.conn() == Conn::Dual;
            // context atoms must never be ax-principal; derivations have to
            // lift to arbitrary multisets
            if (lit && literal_dual(x) == y && !is_ctx(x))
                return ProofTree{here, Rule::Ax, {}};
        }

        // Invertibles are tried first but remain backtrackable: a compound
        // hypothesis may only match before decomposition.
        if (ms.contains(Formula::bot())) {
            if (auto p = search(ms.removed(Formula::bot()), cut_budget))
                return ProofTree{here, Rule::Bot, {*p}};
        }
        for (const auto& f : ms.items()) {
            if (f.conn() != Conn::Par) continue;
            Multiset next = ms.removed(f).plus(f.left()).plus(f.right());
            if (auto p = search(next, cut_budget))
                return ProofTree{here, Rule::Par, {*p}};
            break;
        }

        const auto& items = ms.items();
        for (std::size_t ti = 0; ti < items.size(); ++ti) {
            const Formula& t = items[ti];
            if (t.conn() != Conn::Tensor) continue;
            if (ti > 0 && items[ti] == items[ti - 1]) continue;
            Multiset rest = ms.removed(t);
            std::size_t n = rest.size();
            for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
                std::vector<Formula> ls{t.left()}, rs{t.right()};
                for (std::size_t i = 0; i < n; ++i)
                    (mask >> i & 1 ? ls : rs).push_back(rest.items()[i]);
                auto p1 = search(Multiset(std::move(ls)), cut_budget);
                if (!p1) continue;
                auto p2 = search(Multiset(std::move(rs)), cut_budget);
                if (!p2) continue;
                return ProofTree{here, Rule::Tensor, {*p1, *p2}};
            }
        }

        if (calc.mix && ms.size() >= 2) {
            std::size_t n = ms.size();
            for (std::uint64_t mask = 1; mask < (1ull << n) - 1; mask += 2) {
                std::vector<Formula> ls, rs;
                for (std::size_t i = 0; i < n; ++i)
                    (mask >> i & 1 ? ls : rs).push_back(ms.items()[i]);
                auto p1 = search(Multiset(std::move(ls)), cut_budget);
                if (!p1) continue;
                auto p2 = search(Multiset(std::move(rs)), cut_budget);
                if (!p2) continue;
                return ProofTree{here, Rule::Mix, {*p1, *p2}};
            }
        }

        // cut against the candidate set
        if (cut_budget <= 0) {
            budget_hit = true;
            return std::nullopt;
        }
        std::size_t n = ms.size();
        for (const auto& a : cut_candidates) {
            Formula ad = literal_dual(a);
            for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
                std::vector<Formula> ls{a}, rs{ad};
                for (std::size_t i = 0; i < n; ++i)
                    (mask >> i & 1 ? ls : rs).push_back(ms.items()[i]);
                auto p1 = search(Multiset(std::move(ls)), cut_budget - 1);
                if (!p1) continue;
                auto p2 = search(Multiset(std::move(rs)), cut_budget - 1);
                if (!p2) continue;
                return ProofTree{here, Rule::Cut, {*p1, *p2}};
            }
        }

        return std::nullopt;
    }
};

}  // namespace

SkolemizedRule skolemize(const RuleFile& rule, int context_arity) {
    if (context_arity < 1)
        throw DomainError("skolemize: context arity must be positive");

    // names already taken by formula variables and constants
    std::set<std::string> taken;
    auto scan = [&taken](const SequentSchema& schema) {
        for (const auto& item : schema.items)
            if (const auto* f = std::get_if<Formula>(&item))
                collect_atom_names(*f, taken);
    };
    for (const auto& p : rule.premises) scan(p);
    scan(rule.conclusion);

    // one fresh atom set per context variable, shared across the rule
    std::set<std::string> seen_ctx_per_schema;
    std::vector<std::pair<std::string, std::vector<Formula>>> ctx_map;
    SkolemizedRule out;

    auto ctx_atoms_for = [&](const std::string& var) -> const std::vector<Formula>& {
        for (const auto& [name, atoms] : ctx_map)
            if (name == var) return atoms;
        std::string base;
        for (char c : var)
            base += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        std::vector<Formula> atoms;
        for (int i = 0; i < context_arity; ++i) {
            std::string name = base;
            if (context_arity > 1) name += "_" + std::to_string(i + 1);
            while (taken.count(name)) name += "_ctx";
            taken.insert(name);
            out.context_atoms.push_back(name);
            atoms.push_back(Formula::atom(name));
        }
        ctx_map.emplace_back(var, std::move(atoms));
        return ctx_map.back().second;
    };

    auto instantiate = [&](const SequentSchema& schema) {
        std::set<std::string> seen;
        std::vector<Formula> fs;
        for (const auto& item : schema.items) {
            if (const auto* cv = std::get_if<ContextVar>(&item)) {
                if (!seen.insert(cv->name).second)
                    throw DomainError("context variable '" + cv->name +
                                      "' repeated within one sequent schema");
                for (const auto& a : ctx_atoms_for(cv->name)) fs.push_back(a);
            } else {
                fs.push_back(to_literal_nnf(std::get<Formula>(item)));
            }
        }
        return Sequent{Multiset{}, Multiset(std::move(fs))};
    };

    for (const auto& p : rule.premises) out.hypotheses.push_back(instantiate(p));
    out.goal = instantiate(rule.conclusion);
    return out;
}

RuleVerdict check_rule(const RuleFile& rule, const Calculus& calc,
                       const CheckConfig& cfg) {
    calc.validate();
    if (calc.base != CalculusBase::MLL)
        throw DomainError("check_rule: MLL-family calculus required");

    SkolemizedRule sk = skolemize(rule, cfg.context_arity);

    if (sk.hypotheses.empty()) {
        // premise-free rules reduce to a provability decision
        Verdict v = prove(sk.goal, calc);
        switch (v.kind) {
            case Verdict::Kind::Provable:
                return RuleVerdict{RuleVerdict::Kind::Derivable,
                                   std::move(v.proof), ""};
            case Verdict::Kind::NotProvable:
                return RuleVerdict{RuleVerdict::Kind::NotDerivable, std::nullopt, ""};
            case Verdict::Kind::Unknown:
                return RuleVerdict{RuleVerdict::Kind::Unknown, std::nullopt,
                                   v.reason};
        }
    }

    Search search{calc, sk.hypotheses, {}, {}};
    search.ctx_atoms.insert(sk.context_atoms.begin(), sk.context_atoms.end());

    // Cut candidates: subformulas of the skolemized rule and their duals,
    // except context atoms, which must never be principal.
    std::set<Formula> subs;
    for (const auto& h : sk.hypotheses)
        for (const auto& f : h.succedent.items()) collect_subformulas(f, subs);
    for (const auto& f : sk.goal.succedent.items()) collect_subformulas(f, subs);
    std::set<Formula> cands;
    for (const auto& f : subs) {
        cands.insert(f);
        cands.insert(literal_dual(f));
    }
    for (const auto& f : cands)
        if (!search.is_ctx(f)) search.cut_candidates.push_back(f);

    auto derivation = search.search(sk.goal.succedent, cfg.cut_budget);
    if (derivation) {
        ValidationOptions opts;
        opts.allow_cut = true;
        opts.hypotheses = sk.hypotheses;
        opts.context_atoms = sk.context_atoms;
        auto violations = validate_proof(*derivation, calc, opts);
        if (!violations.empty())
            throw std::logic_error("rule checker produced an invalid derivation: " +
                                   violations.front().message);
        return RuleVerdict{RuleVerdict::Kind::Derivable, std::move(derivation), ""};
    }

    // bounded search cannot refute derivability once premises are involved
    return RuleVerdict{RuleVerdict::Kind::Unknown, std::nullopt,
                       search.budget_hit ? "cut budget exhausted"
                                         : "no derivation found in the bounded search"};
}

}  // namespace ll
