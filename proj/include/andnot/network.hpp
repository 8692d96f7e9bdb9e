#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace andnot {

enum class Sign : std::uint8_t { Positive, Negative };

inline char sign_char(Sign s) { return s == Sign::Positive ? '+' : '-'; }

/// A packed network state: bit i holds the value of variable i.
using State = std::uint32_t;

inline bool state_bit(State s, int v) { return (s >> v) & 1u; }

inline State state_with_bit(State s, int v, bool value)
{
    State mask = State{1} << v;
    return value ? (s | mask) : (s & ~mask);
}

/// Renders a state as a 0/1 string in variable order ("0110" style).
std::string format_state(State s, int variable_count);

struct Literal {
    int var = -1;
    Sign sign = Sign::Positive;

    friend bool operator==(const Literal&, const Literal&) = default;
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

enum class FunctionKind : std::uint8_t { ConstantZero, ConstantOne, Conjunction };

/// Update rule of a single variable: the constant 0, the constant 1, or a
/// conjunction of literals over pairwise distinct variables. A source
/// variable v is represented as the one-literal conjunction {(v, +)}.
class UpdateFunction {
public:
    static UpdateFunction constant(bool value);

    /// Builds a conjunction; literals are stored sorted by variable.
    /// Throws std::invalid_argument when empty or when two literals name
    /// the same variable.
    static UpdateFunction conjunction(std::vector<Literal> literals);

    FunctionKind kind() const { return kind_; }
    bool is_constant() const { return kind_ != FunctionKind::Conjunction; }
    bool constant_value() const { return kind_ == FunctionKind::ConstantOne; }
    const std::vector<Literal>& literals() const { return literals_; }

    friend bool operator==(const UpdateFunction&, const UpdateFunction&) = default;

private:
    UpdateFunction(FunctionKind kind, std::vector<Literal> literals)
        : kind_(kind), literals_(std::move(literals))
    {
    }

    FunctionKind kind_ = FunctionKind::ConstantZero;
    std::vector<Literal> literals_;
};

bool evaluate(const UpdateFunction& fn, State x);

/// An AND-NOT Boolean network: an ordered list of named variables, one
/// update function per variable. Immutable after construction.
class BooleanNetwork {
public:
    BooleanNetwork(std::vector<std::string> names, std::vector<UpdateFunction> functions);

    int variable_count() const { return static_cast<int>(names_.size()); }
    const std::string& name(int v) const { return names_.at(v); }
    const std::vector<std::string>& names() const { return names_; }

    /// Index of a variable name, or -1 when absent.
    int index_of(std::string_view name) const;

    const UpdateFunction& function(int v) const { return functions_.at(v); }
    const std::vector<UpdateFunction>& functions() const { return functions_; }

    /// f_v = v, i.e. the conjunction {(v, +)}.
    bool is_source(int v) const;

    friend bool operator==(const BooleanNetwork& a, const BooleanNetwork& b)
    {
        return a.names_ == b.names_ && a.functions_ == b.functions_;
    }

private:
    std::vector<std::string> names_;
    std::vector<UpdateFunction> functions_;
    std::unordered_map<std::string, int> index_;
};

class ParseError : public std::runtime_error {
public:
    enum class Code { Syntax, DuplicateTarget, UnknownVariable, DuplicateLiteral, EmptyNetwork };

    ParseError(Code code, int line, const std::string& message)
        : std::runtime_error(message), code_(code), line_(line)
    {
    }

    Code code() const { return code_; }
    int line() const { return line_; }

private:
    Code code_;
    int line_;
};

struct StateSpaceTooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses the `.anbnet` line format: `<name>, <expr>` with `<expr>` one of
/// `0`, `1`, or a `&`-separated list of `name` / `!name` literals. Blank
/// lines and `#` comments are skipped, as is a leading `targets, factors`
/// header. Variable order is the first-appearance order of target lines.
BooleanNetwork parse_network(std::string_view text);

/// Canonical text form; parse_network(serialize_network(bn)) == bn.
std::string serialize_network(const BooleanNetwork& bn);

/// Substitutes the values of constant variables into every non-constant
/// function: a satisfied literal is dropped, a falsified one collapses the
/// conjunction to 0, and a conjunction left without literals becomes 1.
BooleanNetwork percolate_one_step(const BooleanNetwork& bn);

/// Iterates percolate_one_step until it stabilizes (at most n iterations).
BooleanNetwork percolate_full(const BooleanNetwork& bn);

/// Replaces f_v by the identity v for every v in vars.
BooleanNetwork make_source(const BooleanNetwork& bn, const std::vector<int>& vars);

/// Replaces f_v by a constant for every pinned variable.
BooleanNetwork pin_assignment(const BooleanNetwork& bn,
                              const std::vector<std::pair<int, bool>>& assignment);

} // namespace andnot
