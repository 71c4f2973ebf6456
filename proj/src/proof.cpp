#include "ll/proof.hpp"

#include <algorithm>

namespace ll {

std::string rule_name(Rule r) {
    switch (r) {
        case Rule::Ax: return "ax";
        case Rule::One: return "one";
        case Rule::Bot: return "bot";
        case Rule::Par: return "par";
        case Rule::Tensor: return "tensor";
        case Rule::Mix: return "mix";
        case Rule::Contraction: return "contraction";
        case Rule::Empty: return "empty";
        case Rule::Hypothesis: return "hypothesis";
        case Rule::Cut: return "cut";
        case Rule::MillAx: return "ax";
        case Rule::MillUnitRight: return "i-right";
        case Rule::MillUnitLeft: return "i-left";
        case Rule::MillTensorLeft: return "tensor-left";
        case Rule::MillTensorRight: return "tensor-right";
        case Rule::MillLolliLeft: return "lolli-left";
        case Rule::MillLolliRight: return "lolli-right";
    }
    return "?";
}

std::size_t ProofTree::rule_count() const {
    std::size_t n = 1;
    for (const auto& p : premises) n += p.rule_count();
    return n;
}

std::vector<std::string> ProofTree::rule_trace() const {
    std::vector<std::string> out;
    for (const auto& p : premises) {
        auto sub = p.rule_trace();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    out.push_back(rule_name(rule));
    return out;
}

std::string ProofTree::pretty(int indent) const {
    std::string out(static_cast<std::size_t>(indent) * 2, ' ');
    out += "[" + rule_name(rule) + "] " + conclusion.pretty() + "\n";
    for (const auto& p : premises) out += p.pretty(indent + 1);
    return out;
}

std::string Verdict::str() const {
    switch (kind) {
        case Kind::Provable: return "provable";
        case Kind::NotProvable: return "not-provable";
        case Kind::Unknown:
            return reason.empty() ? "unknown" : "unknown (" + reason + ")";
    }
    return "?";
}

namespace {

struct Checker {
    const Calculus& calc;
    const ValidationOptions& opts;
    std::vector<Violation> out;

    bool is_context_atom(const Formula& f) const {
        if (f.conn() != Conn::Atom && f.conn() != Conn::DualAtom) return false;
        return std::find(opts.context_atoms.begin(), opts.context_atoms.end(),
                         f.name()) != opts.context_atoms.end();
    }

    void fail(const std::string& where, const std::string& msg) {
        out.push_back({where, msg});
    }

    static bool literal_pair(const Formula& x, const Formula& y) {
        switch (x.conn()) {
            case Conn::Atom:
            case Conn::DualAtom:
            case Conn::One:
            case Conn::Bot:
                return literal_dual(x) == y;
            default:
                return false;
        }
    }

    void check(const ProofTree& node, const std::string& where) {
        std::size_t want_arity = 0;
        switch (node.rule) {
            case Rule::Ax: case Rule::One: case Rule::Empty:
            case Rule::Hypothesis: case Rule::MillAx: case Rule::MillUnitRight:
                want_arity = 0; break;
            case Rule::Bot: case Rule::Par: case Rule::Contraction:
            case Rule::MillUnitLeft: case Rule::MillTensorLeft:
            case Rule::MillLolliRight:
                want_arity = 1; break;
            case Rule::Tensor: case Rule::Mix: case Rule::Cut:
            case Rule::MillTensorRight: case Rule::MillLolliLeft:
                want_arity = 2; break;
        }
        if (node.premises.size() != want_arity) {
            fail(where, rule_name(node.rule) + ": expected " +
                            std::to_string(want_arity) + " premises, got " +
                            std::to_string(node.premises.size()));
            return;
        }

        bool mill_rule = node.rule >= Rule::MillAx;
        if (mill_rule && calc.base != CalculusBase::MILL)
            fail(where, rule_name(node.rule) + ": MILL rule in an MLL proof");
        if (!mill_rule && calc.base != CalculusBase::MLL &&
            node.rule != Rule::Hypothesis && node.rule != Rule::Cut)
            fail(where, rule_name(node.rule) + ": MLL rule in a MILL proof");

        check_schema(node, where);

        for (std::size_t i = 0; i < node.premises.size(); ++i)
            check(node.premises[i],
                  where.empty() ? std::to_string(i) : where + "." + std::to_string(i));
    }

    void check_schema(const ProofTree& node, const std::string& where) {
        const Sequent& c = node.conclusion;
        auto premise = [&](std::size_t i) -> const Sequent& {
            return node.premises[i].conclusion;
        };

        switch (node.rule) {
            case Rule::Ax: {
                if (!c.one_sided() || c.succedent.size() != 2)
                    return fail(where, "ax: conclusion must be a one-sided pair");
                const auto& xs = c.succedent.items();
                if (!literal_pair(xs[0], xs[1]) && !literal_pair(xs[1], xs[0]))
                    return fail(where, "ax: not a dual literal pair: " + c.pretty());
                for (const auto& x : xs)
                    if (is_context_atom(x))
                        return fail(where, "ax: context atom is principal: " + x.pretty());
                return;
            }
            case Rule::One:
                if (!c.one_sided() ||
                    c.succedent != Multiset{Formula::one()})
                    fail(where, "one: conclusion must be |- 1");
                return;
            case Rule::Empty:
                if (!calc.empty_seq)
                    return fail(where, "empty: rule not in this calculus");
                if (!c.one_sided() || !c.succedent.empty())
                    fail(where, "empty: conclusion must be the empty sequent");
                return;
            case Rule::Hypothesis: {
                for (const auto& h : opts.hypotheses)
                    if (h == c) return;
                return fail(where, "hypothesis: no matching premise sequent: " +
                                       c.pretty());
            }
            case Rule::Bot: {
                if (!c.succedent.contains(Formula::bot()))
                    return fail(where, "bot: no bot in conclusion");
                if (premise(0).succedent != c.succedent.removed(Formula::bot()) ||
                    !premise(0).one_sided())
                    fail(where, "bot: premise must drop exactly one bot");
                return;
            }
            case Rule::Par: {
                for (const auto& f : c.succedent.items()) {
                    if (f.conn() != Conn::Par) continue;
                    Multiset want =
                        c.succedent.removed(f).plus(f.left()).plus(f.right());
                    if (premise(0).one_sided() && premise(0).succedent == want)
                        return;
                }
                fail(where, "par: premise does not match any par decomposition");
                return;
            }
            case Rule::Tensor: {
                for (const auto& f : c.succedent.items()) {
                    if (f.conn() != Conn::Tensor) continue;
                    const Multiset& s1 = premise(0).succedent;
                    const Multiset& s2 = premise(1).succedent;
                    if (!premise(0).one_sided() || !premise(1).one_sided()) break;
                    if (!s1.contains(f.left()) || !s2.contains(f.right())) continue;
                    if (mset_union(s1.removed(f.left()), s2.removed(f.right())) ==
                        c.succedent.removed(f))
                        return;
                }
                fail(where, "tensor: premises do not split any tensor in the conclusion");
                return;
            }
            case Rule::Mix: {
                if (!calc.mix)
                    return fail(where, "mix: rule not in this calculus");
                if (mset_union(premise(0).succedent, premise(1).succedent) !=
                        c.succedent ||
                    !premise(0).one_sided() || !premise(1).one_sided())
                    fail(where, "mix: premise multisets do not union to the conclusion");
                return;
            }
            case Rule::Contraction: {
                if (!calc.contraction)
                    return fail(where, "contraction: rule not in this calculus");
                if (premise(0).succedent != c.succedent.plus(Formula::one()) ||
                    !premise(0).one_sided())
                    fail(where, "contraction: premise must add exactly one 1");
                return;
            }
            case Rule::Cut: {
                if (!opts.allow_cut)
                    return fail(where, "cut: not permitted in this proof");
                const Multiset& s1 = premise(0).succedent;
                const Multiset& s2 = premise(1).succedent;
                for (const auto& a : s1.items()) {
                    Formula ad = literal_dual(a);
                    if (!s2.contains(ad)) continue;
                    if (mset_union(s1.removed(a), s2.removed(ad)) != c.succedent)
                        continue;
                    if (is_context_atom(a))
                        return fail(where, "cut: context atom is the cut formula: " +
                                               a.pretty());
                    return;
                }
                fail(where, "cut: premises do not share a dual pair matching the conclusion");
                return;
            }
            case Rule::MillAx: {
                if (c.succedent.size() != 1 || c.antecedent.size() != 1 ||
                    c.antecedent != c.succedent ||
                    c.succedent.items()[0].conn() != Conn::Atom)
                    fail(where, "ax: conclusion must be a |- a for atomic a");
                return;
            }
            case Rule::MillUnitRight:
                if (!c.antecedent.empty() ||
                    c.succedent != Multiset{Formula::unit_i()})
                    fail(where, "i-right: conclusion must be |- I");
                return;
            case Rule::MillUnitLeft: {
                if (!c.antecedent.contains(Formula::unit_i()))
                    return fail(where, "i-left: no I in antecedent");
                if (premise(0).antecedent != c.antecedent.removed(Formula::unit_i()) ||
                    premise(0).succedent != c.succedent)
                    fail(where, "i-left: premise must drop exactly one I");
                return;
            }
            case Rule::MillTensorLeft: {
                for (const auto& f : c.antecedent.items()) {
                    if (f.conn() != Conn::Tensor) continue;
                    Multiset want =
                        c.antecedent.removed(f).plus(f.left()).plus(f.right());
                    if (premise(0).antecedent == want &&
                        premise(0).succedent == c.succedent)
                        return;
                }
                fail(where, "tensor-left: premise does not match any decomposition");
                return;
            }
            case Rule::MillTensorRight: {
                if (c.succedent.size() != 1 ||
                    c.succedent.items()[0].conn() != Conn::Tensor)
                    return fail(where, "tensor-right: succedent must be a tensor");
                Formula t = c.succedent.items()[0];
                if (premise(0).succedent != Multiset{t.left()} ||
                    premise(1).succedent != Multiset{t.right()} ||
                    mset_union(premise(0).antecedent, premise(1).antecedent) !=
                        c.antecedent)
                    fail(where, "tensor-right: premises do not split the context");
                return;
            }
            case Rule::MillLolliRight: {
                if (c.succedent.size() != 1 ||
                    c.succedent.items()[0].conn() != Conn::Lollipop)
                    return fail(where, "lolli-right: succedent must be a lollipop");
                Formula l = c.succedent.items()[0];
                if (premise(0).antecedent != c.antecedent.plus(l.left()) ||
                    premise(0).succedent != Multiset{l.right()})
                    fail(where, "lolli-right: premise does not move the argument left");
                return;
            }
            case Rule::MillLolliLeft: {
                if (c.succedent.size() != 1)
                    return fail(where, "lolli-left: single succedent required");
                for (const auto& f : c.antecedent.items()) {
                    if (f.conn() != Conn::Lollipop) continue;
                    if (premise(0).succedent != Multiset{f.left()}) continue;
                    if (premise(1).succedent != c.succedent) continue;
                    if (!premise(1).antecedent.contains(f.right())) continue;
                    if (mset_union(premise(0).antecedent,
                                   premise(1).antecedent.removed(f.right())) ==
                        c.antecedent.removed(f))
                        return;
                }
                fail(where, "lolli-left: premises do not split any lollipop");
                return;
            }
        }
    }
};

}  // namespace

std::vector<Violation> validate_proof(const ProofTree& p, const Calculus& calc,
                                      const ValidationOptions& opts) {
    Checker c{calc, opts, {}};
    c.check(p, "");
    return c.out;
}

}  // namespace ll
