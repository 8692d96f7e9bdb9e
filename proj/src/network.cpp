#include "andnot/network.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace andnot {

std::string format_state(State s, int variable_count)
{
    std::string out(static_cast<std::size_t>(variable_count), '0');
    for (int v = 0; v < variable_count; ++v)
        if (state_bit(s, v))
            out[static_cast<std::size_t>(v)] = '1';
    return out;
}

UpdateFunction UpdateFunction::constant(bool value)
{
    return UpdateFunction(value ? FunctionKind::ConstantOne : FunctionKind::ConstantZero, {});
}

UpdateFunction UpdateFunction::conjunction(std::vector<Literal> literals)
{
    if (literals.empty())
        throw std::invalid_argument("conjunction requires at least one literal");
    std::sort(literals.begin(), literals.end(),
              [](const Literal& a, const Literal& b) { return a.var < b.var; });
    for (std::size_t i = 1; i < literals.size(); ++i)
        if (literals[i].var == literals[i - 1].var)
            throw std::invalid_argument("conjunction contains two literals of one variable");
    return UpdateFunction(FunctionKind::Conjunction, std::move(literals));
}

bool evaluate(const UpdateFunction& fn, State x)
{
    switch (fn.kind()) {
    case FunctionKind::ConstantZero:
        return false;
    case FunctionKind::ConstantOne:
        return true;
    case FunctionKind::Conjunction:
        for (const Literal& lit : fn.literals()) {
            bool value = state_bit(x, lit.var);
            if (lit.sign == Sign::Negative)
                value = !value;
            if (!value)
                return false;
        }
        return true;
    }
    return false;
}

namespace {

bool valid_identifier(std::string_view s)
{
    if (s.empty())
        return false;
    auto head = static_cast<unsigned char>(s[0]);
    if (!std::isalpha(head) && s[0] != '_')
        return false;
    for (char c : s.substr(1))
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

BooleanNetwork::BooleanNetwork(std::vector<std::string> names,
                               std::vector<UpdateFunction> functions)
    : names_(std::move(names)), functions_(std::move(functions))
{
    if (names_.empty())
        throw std::invalid_argument("network has no variables");
    if (names_.size() != functions_.size())
        throw std::invalid_argument("one update function per variable required");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!valid_identifier(names_[i]))
            throw std::invalid_argument("invalid variable name: " + names_[i]);
        if (!index_.emplace(names_[i], static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate variable name: " + names_[i]);
    }
    int n = variable_count();
    for (const UpdateFunction& fn : functions_)
        for (const Literal& lit : fn.literals())
            if (lit.var < 0 || lit.var >= n)
                throw std::invalid_argument("literal references an undeclared variable");
}

int BooleanNetwork::index_of(std::string_view name) const
{
    auto it = index_.find(std::string(name));
    return it == index_.end() ? -1 : it->second;
}

bool BooleanNetwork::is_source(int v) const
{
    const UpdateFunction& fn = functions_.at(v);
    return fn.kind() == FunctionKind::Conjunction && fn.literals().size() == 1 &&
           fn.literals()[0] == Literal{v, Sign::Positive};
}

namespace {

struct RawLine {
    std::string target;
    std::string expr;
    int line_no = 0;
};

[[noreturn]] void syntax_error(int line, const std::string& what)
{
    throw ParseError(ParseError::Code::Syntax, line,
                     "line " + std::to_string(line) + ": " + what);
}

} // namespace

BooleanNetwork parse_network(std::string_view text)
{
    std::vector<RawLine> raw;
    bool first_content_line = true;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        std::string_view line = (end == std::string_view::npos)
                                    ? text.substr(pos)
                                    : text.substr(pos, end - pos);
        pos = (end == std::string_view::npos) ? text.size() + 1 : end + 1;
        ++line_no;

        line = trim(line);
        if (line.empty() || line.front() == '#')
            continue;

        std::size_t comma = line.find(',');
        if (comma == std::string_view::npos)
            syntax_error(line_no, "expected '<name>, <expression>'");
        std::string target(trim(line.substr(0, comma)));
        std::string expr(trim(line.substr(comma + 1)));

        if (first_content_line && target == "targets" && expr == "factors") {
            first_content_line = false;
            continue;
        }
        first_content_line = false;

        if (!valid_identifier(target))
            syntax_error(line_no, "invalid target name '" + target + "'");
        if (expr.empty())
            syntax_error(line_no, "empty expression for '" + target + "'");
        raw.push_back(RawLine{std::move(target), std::move(expr), line_no});
    }

    if (raw.empty())
        throw ParseError(ParseError::Code::EmptyNetwork, 0, "input declares no variables");

    std::vector<std::string> names;
    std::unordered_map<std::string, int> index;
    for (const RawLine& r : raw) {
        if (!index.emplace(r.target, static_cast<int>(names.size())).second)
            throw ParseError(ParseError::Code::DuplicateTarget, r.line_no,
                             "line " + std::to_string(r.line_no) + ": duplicate target '" +
                                 r.target + "'");
        names.push_back(r.target);
    }

    std::vector<UpdateFunction> functions;
    functions.reserve(raw.size());
    for (const RawLine& r : raw) {
        if (r.expr == "0" || r.expr == "1") {
            functions.push_back(UpdateFunction::constant(r.expr == "1"));
            continue;
        }
        std::vector<Literal> literals;
        std::size_t start = 0;
        while (start <= r.expr.size()) {
            std::size_t amp = r.expr.find('&', start);
            std::string_view token = (amp == std::string_view::npos)
                                         ? std::string_view(r.expr).substr(start)
                                         : std::string_view(r.expr).substr(start, amp - start);
            start = (amp == std::string_view::npos) ? r.expr.size() + 1 : amp + 1;

            token = trim(token);
            Sign sign = Sign::Positive;
            if (!token.empty() && token.front() == '!') {
                sign = Sign::Negative;
                token = trim(token.substr(1));
            }
            if (!valid_identifier(token))
                syntax_error(r.line_no, "invalid literal '" + std::string(token) +
                                            "' (only '!' and '&' are supported)");
            int var = -1;
            if (auto it = index.find(std::string(token)); it != index.end())
                var = it->second;
            else
                throw ParseError(ParseError::Code::UnknownVariable, r.line_no,
                                 "line " + std::to_string(r.line_no) + ": literal '" +
                                     std::string(token) + "' has no target line");
            for (const Literal& lit : literals)
                if (lit.var == var)
                    throw ParseError(ParseError::Code::DuplicateLiteral, r.line_no,
                                     "line " + std::to_string(r.line_no) + ": variable '" +
                                         std::string(token) + "' appears twice in one conjunction");
            literals.push_back(Literal{var, sign});
        }
        functions.push_back(UpdateFunction::conjunction(std::move(literals)));
    }

    return BooleanNetwork(std::move(names), std::move(functions));
}

std::string serialize_network(const BooleanNetwork& bn)
{
    std::ostringstream out;
    for (int v = 0; v < bn.variable_count(); ++v) {
        const UpdateFunction& fn = bn.function(v);
        out << bn.name(v) << ", ";
        switch (fn.kind()) {
        case FunctionKind::ConstantZero:
            out << '0';
            break;
        case FunctionKind::ConstantOne:
            out << '1';
            break;
        case FunctionKind::Conjunction: {
            bool first = true;
            for (const Literal& lit : fn.literals()) {
                if (!first)
                    out << " & ";
                first = false;
                if (lit.sign == Sign::Negative)
                    out << '!';
                out << bn.name(lit.var);
            }
            break;
        }
        }
        out << '\n';
    }
    return out.str();
}

BooleanNetwork percolate_one_step(const BooleanNetwork& bn)
{
    int n = bn.variable_count();
    std::vector<int> constant(n, -1); // -1 unknown, 0/1 the constant value
    for (int v = 0; v < n; ++v)
        if (bn.function(v).is_constant())
            constant[v] = bn.function(v).constant_value() ? 1 : 0;

    std::vector<UpdateFunction> functions;
    functions.reserve(n);
    for (int v = 0; v < n; ++v) {
        const UpdateFunction& fn = bn.function(v);
        if (fn.is_constant()) {
            functions.push_back(fn);
            continue;
        }
        std::vector<Literal> kept;
        bool falsified = false;
        for (const Literal& lit : fn.literals()) {
            if (constant[lit.var] < 0) {
                kept.push_back(lit);
                continue;
            }
            bool satisfied = (constant[lit.var] == 1) == (lit.sign == Sign::Positive);
            if (!satisfied) {
                falsified = true;
                break;
            }
        }
        if (falsified)
            functions.push_back(UpdateFunction::constant(false));
        else if (kept.empty())
            functions.push_back(UpdateFunction::constant(true));
        else
            functions.push_back(UpdateFunction::conjunction(std::move(kept)));
    }
    return BooleanNetwork(bn.names(), std::move(functions));
}

BooleanNetwork percolate_full(const BooleanNetwork& bn)
{
    BooleanNetwork current = bn;
    for (int step = 0; step <= bn.variable_count(); ++step) {
        BooleanNetwork next = percolate_one_step(current);
        if (next == current)
            return current;
        current = std::move(next);
    }
    return current;
}

BooleanNetwork make_source(const BooleanNetwork& bn, const std::vector<int>& vars)
{
    std::vector<UpdateFunction> functions = bn.functions();
    for (int v : vars)
        functions.at(v) = UpdateFunction::conjunction({Literal{v, Sign::Positive}});
    return BooleanNetwork(bn.names(), std::move(functions));
}

BooleanNetwork pin_assignment(const BooleanNetwork& bn,
                              const std::vector<std::pair<int, bool>>& assignment)
{
    std::vector<UpdateFunction> functions = bn.functions();
    std::vector<bool> seen(bn.variable_count(), false);
    for (auto [v, value] : assignment) {
        if (seen.at(v))
            throw std::invalid_argument("variable pinned twice");
        seen[v] = true;
        functions[v] = UpdateFunction::constant(value);
    }
    return BooleanNetwork(bn.names(), std::move(functions));
}

} // namespace andnot
