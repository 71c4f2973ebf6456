#pragma once

#include <memory>
#include <stdexcept>
#include <string>

namespace ll {

/// Raised when an operation is applied outside its domain
/// (e.g. MLL dualization of a lollipop).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

enum class Conn {
    One,
    Bot,
    UnitI,
    Atom,
    DualAtom,
    Dual,
    Tensor,
    Par,
    Lollipop,
};

/// Immutable formula tree. Copies share structure.
class Formula {
public:
    static Formula atom(std::string name);
    static Formula dual_atom(std::string name);
    static Formula dual(Formula f);
    static Formula tensor(Formula l, Formula r);
    static Formula par(Formula l, Formula r);
    static Formula lollipop(Formula l, Formula r);
    static Formula one();
    static Formula bot();
    static Formula unit_i();

    Conn conn() const;
    const std::string& name() const;  // Atom / DualAtom only
    Formula child() const;            // Dual only
    Formula left() const;             // binary connectives
    Formula right() const;
    bool is_binary() const;
    std::size_t node_count() const;

    bool operator==(const Formula& o) const;
    bool operator!=(const Formula& o) const { return !(*this == o); }
    bool operator<(const Formula& o) const { return compare(*this, o) < 0; }

    /// Total order used for canonical multisets.
    friend int compare(const Formula& a, const Formula& b);

    /// Concrete syntax with minimal parentheses; reparses to the same tree.
    std::string pretty() const;

    struct Node;  // definition private to the implementation file

private:
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// NNF dual of an MLL formula: De Morgan over tensor/par, atoms flipped,
/// units swapped (1 <-> bot). Rejects lollipop and I.
Formula dualize(const Formula& f);

/// Eliminates Dual nodes from an MLL formula via dualize. Idempotent.
Formula to_nnf(const Formula& f);

/// Like to_nnf, but duals of units stay opaque: Dual(1) and Dual(bot) are
/// kept as literals instead of being identified with bot and 1. This is the
/// normal form the MLL search works on; it matches the axiomatization in
/// which dual is a free unary symbol.
Formula to_literal_nnf(const Formula& f);

/// Involutive dual on literal-NNF formulas (units map to Dual(unit)).
Formula literal_dual(const Formula& f);

/// Rewrites Dual(x) -> x -o I and Par(x, y) -> (x -o I) -o y, recursively.
/// Rejects 1, bot and dual atoms. Idempotent.
Formula expand_defs(const Formula& f);

bool is_mll_nnf(const Formula& f);
bool is_mill_expanded(const Formula& f);

}  // namespace ll
