#include "ll/formula.hpp"

#include <utility>

namespace ll {

struct Formula::Node {
    Conn conn;
    std::string name;                      // Atom / DualAtom
    std::shared_ptr<const Node> left;      // Dual uses left
    std::shared_ptr<const Node> right;
    std::size_t size;
};

namespace {

std::shared_ptr<const Formula::Node> make_leaf(Conn c, std::string name = {}) {
    return std::make_shared<const Formula::Node>(
        Formula::Node{c, std::move(name), nullptr, nullptr, 1});
}

int conn_rank(Conn c) { return static_cast<int>(c); }

}  // namespace

Formula Formula::atom(std::string name) {
    if (name.empty()) throw DomainError("atom name must be nonempty");
    return Formula(make_leaf(Conn::Atom, std::move(name)));
}

Formula Formula::dual_atom(std::string name) {
    if (name.empty()) throw DomainError("atom name must be nonempty");
    return Formula(make_leaf(Conn::DualAtom, std::move(name)));
}

Formula Formula::dual(Formula f) {
    auto n = std::make_shared<const Node>(
        Node{Conn::Dual, {}, f.node_, nullptr, 1 + f.node_count()});
    return Formula(n);
}

Formula Formula::tensor(Formula l, Formula r) {
    auto n = std::make_shared<const Node>(
        Node{Conn::Tensor, {}, l.node_, r.node_, 1 + l.node_count() + r.node_count()});
    return Formula(n);
}

Formula Formula::par(Formula l, Formula r) {
    auto n = std::make_shared<const Node>(
        Node{Conn::Par, {}, l.node_, r.node_, 1 + l.node_count() + r.node_count()});
    return Formula(n);
}

Formula Formula::lollipop(Formula l, Formula r) {
    auto n = std::make_shared<const Node>(
        Node{Conn::Lollipop, {}, l.node_, r.node_, 1 + l.node_count() + r.node_count()});
    return Formula(n);
}

Formula Formula::one() { return Formula(make_leaf(Conn::One)); }
Formula Formula::bot() { return Formula(make_leaf(Conn::Bot)); }
Formula Formula::unit_i() { return Formula(make_leaf(Conn::UnitI)); }

Conn Formula::conn() const { return node_->conn; }

std::size_t Formula::node_count() const { return node_->size; }

const std::string& Formula::name() const {
    if (node_->conn != Conn::Atom && node_->conn != Conn::DualAtom)
        throw DomainError("name() on non-atom");
    return node_->name;
}

Formula Formula::child() const {
    if (node_->conn != Conn::Dual) throw DomainError("child() on non-dual");
    return Formula(node_->left);
}

Formula Formula::left() const {
    if (!is_binary() && node_->conn != Conn::Dual)
        throw DomainError("left() on leaf");
    return Formula(node_->left);
}

Formula Formula::right() const {
    if (!is_binary()) throw DomainError("right() on non-binary");
    return Formula(node_->right);
}

bool Formula::is_binary() const {
    switch (node_->conn) {
        case Conn::Tensor:
        case Conn::Par:
        case Conn::Lollipop:
            return true;
        default:
            return false;
    }
}

bool Formula::operator==(const Formula& o) const { return compare(*this, o) == 0; }

int compare(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return 0;
    int ra = conn_rank(a.node_->conn), rb = conn_rank(b.node_->conn);
    if (ra != rb) return ra < rb ? -1 : 1;
    switch (a.node_->conn) {
        case Conn::Atom:
        case Conn::DualAtom:
            return a.node_->name.compare(b.node_->name) < 0
                       ? -1
                       : (a.node_->name == b.node_->name ? 0 : 1);
        case Conn::Dual:
            return compare(Formula(a.node_->left), Formula(b.node_->left));
        case Conn::Tensor:
        case Conn::Par:
        case Conn::Lollipop: {
            int c = compare(Formula(a.node_->left), Formula(b.node_->left));
            if (c != 0) return c;
            return compare(Formula(a.node_->right), Formula(b.node_->right));
        }
        default:
            return 0;
    }
}

// Pretty printing. Precedence levels, loosest first:
//   0 lollipop (right assoc), 1 par, 2 tensor, 3 postfix dual, 4 primary.
namespace {

void print_rec(const Formula& f, int min_prec, std::string& out) {
    switch (f.conn()) {
        case Conn::Atom:
            out += f.name();
            return;
        case Conn::DualAtom:
            out += f.name();
            out += '^';
            return;
        case Conn::One:
            out += '1';
            return;
        case Conn::Bot:
            out += "bot";
            return;
        case Conn::UnitI:
            out += 'I';
            return;
        case Conn::Dual: {
            bool parens = 3 < min_prec;
            if (parens) out += '(';
            print_rec(f.child(), 3, out);
            out += '^';
            if (parens) out += ')';
            return;
        }
        case Conn::Tensor: {
            bool parens = 2 < min_prec;
            if (parens) out += '(';
            print_rec(f.left(), 2, out);
            out += " * ";
            print_rec(f.right(), 3, out);
            if (parens) out += ')';
            return;
        }
        case Conn::Par: {
            bool parens = 1 < min_prec;
            if (parens) out += '(';
            print_rec(f.left(), 1, out);
            out += " # ";
            print_rec(f.right(), 2, out);
            if (parens) out += ')';
            return;
        }
        case Conn::Lollipop: {
            bool parens = 0 < min_prec;
            if (parens) out += '(';
            print_rec(f.left(), 1, out);
            out += " -o ";
            print_rec(f.right(), 0, out);
            if (parens) out += ')';
            return;
        }
    }
}

}  // namespace

std::string Formula::pretty() const {
    std::string out;
    print_rec(*this, 0, out);
    return out;
}

Formula dualize(const Formula& f) {
    switch (f.conn()) {
        case Conn::Atom:
            return Formula::dual_atom(f.name());
        case Conn::DualAtom:
            return Formula::atom(f.name());
        case Conn::One:
            return Formula::bot();
        case Conn::Bot:
            return Formula::one();
        case Conn::Dual:
            return to_nnf(f.child());
        case Conn::Tensor:
            return Formula::par(dualize(f.left()), dualize(f.right()));
        case Conn::Par:
            return Formula::tensor(dualize(f.left()), dualize(f.right()));
        case Conn::Lollipop:
        case Conn::UnitI:
            throw DomainError("dualize: not an MLL formula: " + f.pretty());
    }
    throw DomainError("dualize: unreachable");
}

Formula to_nnf(const Formula& f) {
    switch (f.conn()) {
        case Conn::Atom:
        case Conn::DualAtom:
        case Conn::One:
        case Conn::Bot:
            return f;
        case Conn::Dual:
            return dualize(f.child());
        case Conn::Tensor:
            return Formula::tensor(to_nnf(f.left()), to_nnf(f.right()));
        case Conn::Par:
            return Formula::par(to_nnf(f.left()), to_nnf(f.right()));
        case Conn::Lollipop:
        case Conn::UnitI:
            throw DomainError("to_nnf: not an MLL formula: " + f.pretty());
    }
    throw DomainError("to_nnf: unreachable");
}

Formula literal_dual(const Formula& f) {
    switch (f.conn()) {
        case Conn::Atom:
            return Formula::dual_atom(f.name());
        case Conn::DualAtom:
            return Formula::atom(f.name());
        case Conn::One:
        case Conn::Bot:
            return Formula::dual(f);
        case Conn::Dual: {
            const Formula& c = f.child();
            if (c.conn() == Conn::One || c.conn() == Conn::Bot) return c;
            return to_literal_nnf(c);
        }
        case Conn::Tensor:
            return Formula::par(literal_dual(f.left()), literal_dual(f.right()));
        case Conn::Par:
            return Formula::tensor(literal_dual(f.left()), literal_dual(f.right()));
        case Conn::Lollipop:
        case Conn::UnitI:
            throw DomainError("literal_dual: not an MLL formula: " + f.pretty());
    }
    throw DomainError("literal_dual: unreachable");
}

Formula to_literal_nnf(const Formula& f) {
    switch (f.conn()) {
        case Conn::Atom:
        case Conn::DualAtom:
        case Conn::One:
        case Conn::Bot:
            return f;
        case Conn::Dual:
            return literal_dual(f.child());
        case Conn::Tensor:
            return Formula::tensor(to_literal_nnf(f.left()), to_literal_nnf(f.right()));
        case Conn::Par:
            return Formula::par(to_literal_nnf(f.left()), to_literal_nnf(f.right()));
        case Conn::Lollipop:
        case Conn::UnitI:
            throw DomainError("to_literal_nnf: not an MLL formula: " + f.pretty());
    }
    throw DomainError("to_literal_nnf: unreachable");
}

Formula expand_defs(const Formula& f) {
    switch (f.conn()) {
        case Conn::Atom:
        case Conn::UnitI:
            return f;
        case Conn::Dual:
            return Formula::lollipop(expand_defs(f.child()), Formula::unit_i());
        case Conn::Par:
            // X # Y = X^ -o Y = (X -o I) -o Y
            return Formula::lollipop(
                Formula::lollipop(expand_defs(f.left()), Formula::unit_i()),
                expand_defs(f.right()));
        case Conn::Tensor:
            return Formula::tensor(expand_defs(f.left()), expand_defs(f.right()));
        case Conn::Lollipop:
            return Formula::lollipop(expand_defs(f.left()), expand_defs(f.right()));
        case Conn::One:
        case Conn::Bot:
        case Conn::DualAtom:
            throw DomainError("expand_defs: not a MILL formula: " + f.pretty());
    }
    throw DomainError("expand_defs: unreachable");
}

bool is_mll_nnf(const Formula& f) {
    switch (f.conn()) {
        case Conn::Atom:
        case Conn::DualAtom:
        case Conn::One:
        case Conn::Bot:
            return true;
        case Conn::Tensor:
        case Conn::Par:
            return is_mll_nnf(f.left()) && is_mll_nnf(f.right());
        default:
            return false;
    }
}

bool is_mill_expanded(const Formula& f) {
    switch (f.conn()) {
        case Conn::Atom:
        case Conn::UnitI:
            return true;
        case Conn::Tensor:
        case Conn::Lollipop:
            return is_mill_expanded(f.left()) && is_mill_expanded(f.right());
        default:
            return false;
    }
}

}  // namespace ll
