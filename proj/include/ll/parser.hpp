#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ll/formula.hpp"
#include "ll/sequent.hpp"

namespace ll {

struct SourcePos {
    int line = 1;    // 1-based
    int column = 1;  // 1-based
};

class ParseError : public std::runtime_error {
public:
    ParseError(SourcePos pos, std::string message,
               std::vector<std::string> expected = {});

    SourcePos pos;
    std::string message;
    std::vector<std::string> expected;
};

/// Multiset placeholder in a rule schema (uppercase identifier).
struct ContextVar {
    std::string name;
    bool operator==(const ContextVar& o) const { return name == o.name; }
};

/// One comma-separated slot of a schematic sequent: either a context
/// variable or a concrete formula term (whose atoms act as formula
/// variables shared across the rule).
using SchemaItem = std::variant<ContextVar, Formula>;

struct SequentSchema {
    std::vector<SchemaItem> items;  // succedent slots; schemas are one-sided

    bool is_ground() const;  // no context variables
    std::string pretty() const;
};

struct RuleFile {
    std::string name;
    std::vector<SequentSchema> premises;
    SequentSchema conclusion;
};

/// Grammar, tightest first: postfix ^ (dual), * (tensor, left), # (par,
/// left), -o (lollipop, right). Keywords 1, bot, I are units.
Formula parse_formula(const std::string& text);

/// "[formulas] |- [formulas]"; either side may be empty.
Sequent parse_sequent(const std::string& text);

/// "rule <name>:" then premise sequents one per line, a separator of 4+
/// dashes, then the conclusion sequent. Zero premises allowed.
RuleFile parse_rule_file(const std::string& text);

/// A file may hold several rules; names must be distinct.
std::vector<RuleFile> parse_rule_files(const std::string& text);

}  // namespace ll
