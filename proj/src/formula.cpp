#include "vval/formula.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "vval/errors.hpp"

namespace vval {

struct Formula::Node {
    Kind kind;
    std::string name;
    std::vector<Formula> children;
    bool has_meaning_imp = false;
    std::size_t depth = 0;
};

namespace {

bool is_binary(Formula::Kind k)
{
    return k != Formula::Kind::Atom && k != Formula::Kind::Not;
}

} // namespace

Formula Formula::atom(std::string name)
{
    return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}, false, 0}));
}

Formula Formula::negation(Formula operand)
{
    const bool m = operand.contains_meaning_imp();
    const std::size_t d = operand.depth() + 1;
    return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {std::move(operand)}, m, d}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs)
{
    const bool m = lhs.contains_meaning_imp() || rhs.contains_meaning_imp();
    const std::size_t d = std::max(lhs.depth(), rhs.depth()) + 1;
    return Formula(std::make_shared<const Node>(Node{Kind::And, {}, {std::move(lhs), std::move(rhs)}, m, d}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs)
{
    const bool m = lhs.contains_meaning_imp() || rhs.contains_meaning_imp();
    const std::size_t d = std::max(lhs.depth(), rhs.depth()) + 1;
    return Formula(std::make_shared<const Node>(Node{Kind::Or, {}, {std::move(lhs), std::move(rhs)}, m, d}));
}

Formula Formula::material(Formula lhs, Formula rhs)
{
    const bool m = lhs.contains_meaning_imp() || rhs.contains_meaning_imp();
    const std::size_t d = std::max(lhs.depth(), rhs.depth()) + 1;
    return Formula(
        std::make_shared<const Node>(Node{Kind::MaterialImp, {}, {std::move(lhs), std::move(rhs)}, m, d}));
}

Formula Formula::meaning(Formula lhs, Formula rhs)
{
    const std::size_t d = std::max(lhs.depth(), rhs.depth()) + 1;
    return Formula(
        std::make_shared<const Node>(Node{Kind::MeaningImp, {}, {std::move(lhs), std::move(rhs)}, true, d}));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::name() const noexcept { return node_->name; }

const Formula& Formula::operand() const
{
    if (node_->kind != Kind::Not) {
        throw std::logic_error("Formula::operand on a non-negation");
    }
    return node_->children[0];
}

const Formula& Formula::lhs() const
{
    if (!is_binary(node_->kind)) {
        throw std::logic_error("Formula::lhs on a non-binary formula");
    }
    return node_->children[0];
}

const Formula& Formula::rhs() const
{
    if (!is_binary(node_->kind)) {
        throw std::logic_error("Formula::rhs on a non-binary formula");
    }
    return node_->children[1];
}

bool Formula::contains_meaning_imp() const noexcept { return node_->has_meaning_imp; }

std::size_t Formula::depth() const noexcept { return node_->depth; }

bool operator==(const Formula& lhs, const Formula& rhs) noexcept
{
    if (lhs.node_ == rhs.node_) {
        return true;
    }
    const auto& a = *lhs.node_;
    const auto& b = *rhs.node_;
    return a.kind == b.kind && a.name == b.name && a.depth == b.depth && a.children == b.children;
}

bool admissible(const Formula& f, Mode mode) noexcept
{
    if (mode == Mode::Extended || !f.contains_meaning_imp()) {
        return true;
    }
    return f.kind() == Formula::Kind::MeaningImp && !f.lhs().contains_meaning_imp()
           && !f.rhs().contains_meaning_imp();
}

// ---------------------------------------------------------------------------
// Parser

namespace detail {

class FormulaParser {
public:
    explicit FormulaParser(std::string_view text) : text_(text) { advance(); }

    Formula parse_all(Mode mode)
    {
        Formula f = parse_meaning(0);
        if (tok_.type != Tok::End) {
            fail("unexpected " + describe(tok_));
        }
        if (mode == Mode::Strict && !admissible(f, mode)) {
            throw ParseError(ParseError::Kind::NestedMeaningImp, first_offending(f),
                             "'=>' is only allowed as the outermost connective in strict mode");
        }
        return f;
    }

private:
    enum class Tok { Ident, Not, And, Or, Imp, MeaningImp, LParen, RParen, End };

    struct Token {
        Tok type;
        std::size_t pos;
        std::string_view text;
    };

    static constexpr std::size_t max_nesting = 4096;

    [[noreturn]] void fail(const std::string& message) const
    {
        throw ParseError(ParseError::Kind::Syntax, tok_.pos, message);
    }

    static std::string describe(const Token& t)
    {
        if (t.type == Tok::End) {
            return "end of input";
        }
        return "'" + std::string(t.text) + "'";
    }

    static bool ident_start(char c)
    {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
    }

    static bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

    bool match(std::string_view s) const { return text_.substr(i_, s.size()) == s; }

    void advance()
    {
        while (i_ < text_.size() && (text_[i_] == ' ' || text_[i_] == '\t' || text_[i_] == '\n' || text_[i_] == '\r')) {
            ++i_;
        }
        const std::size_t start = i_;
        auto take = [&](Tok t, std::size_t len) {
            tok_ = Token{t, start, text_.substr(start, len)};
            i_ += len;
        };
        if (i_ >= text_.size()) {
            tok_ = Token{Tok::End, start, {}};
            return;
        }
        const char c = text_[i_];
        if (ident_start(c)) {
            std::size_t j = i_ + 1;
            while (j < text_.size() && ident_char(text_[j])) {
                ++j;
            }
            take(Tok::Ident, j - i_);
            return;
        }
        struct Op {
            std::string_view spelling;
            Tok type;
        };
        static constexpr Op ops[] = {
            {"->", Tok::Imp},          {"=>", Tok::MeaningImp},   {"~", Tok::Not},       {"&", Tok::And},
            {"|", Tok::Or},            {"(", Tok::LParen},        {")", Tok::RParen},    {"\xC2\xAC", Tok::Not},
            {"\xE2\x88\xA7", Tok::And}, {"\xE2\x88\xA8", Tok::Or}, {"\xE2\x86\x92", Tok::Imp},
            {"\xE2\x87\x92", Tok::MeaningImp},
        };
        for (const auto& op : ops) {
            if (match(op.spelling)) {
                take(op.type, op.spelling.size());
                return;
            }
        }
        throw ParseError(ParseError::Kind::Syntax, start, "unexpected character '" + std::string(text_.substr(start, 1)) + "'");
    }

    void enter(std::size_t depth) const
    {
        if (depth > max_nesting) {
            fail("formula nested too deeply");
        }
    }

    Formula parse_meaning(std::size_t depth)
    {
        enter(depth);
        Formula lhs = parse_material(depth + 1);
        if (tok_.type != Tok::MeaningImp) {
            return lhs;
        }
        const std::size_t pos = tok_.pos;
        advance();
        Formula f = Formula::meaning(std::move(lhs), parse_meaning(depth + 1));
        positions_.emplace(f.node_.get(), pos);
        return f;
    }

    Formula parse_material(std::size_t depth)
    {
        enter(depth);
        Formula lhs = parse_or(depth + 1);
        if (tok_.type != Tok::Imp) {
            return lhs;
        }
        advance();
        return Formula::material(std::move(lhs), parse_material(depth + 1));
    }

    Formula parse_or(std::size_t depth)
    {
        Formula f = parse_and(depth + 1);
        while (tok_.type == Tok::Or) {
            advance();
            f = Formula::disjunction(std::move(f), parse_and(depth + 1));
        }
        return f;
    }

    Formula parse_and(std::size_t depth)
    {
        Formula f = parse_unary(depth + 1);
        while (tok_.type == Tok::And) {
            advance();
            f = Formula::conjunction(std::move(f), parse_unary(depth + 1));
        }
        return f;
    }

    Formula parse_unary(std::size_t depth)
    {
        enter(depth);
        if (tok_.type == Tok::Not) {
            advance();
            return Formula::negation(parse_unary(depth + 1));
        }
        if (tok_.type == Tok::Ident) {
            Formula f = Formula::atom(std::string(tok_.text));
            advance();
            return f;
        }
        if (tok_.type == Tok::LParen) {
            advance();
            Formula f = parse_meaning(depth + 1);
            if (tok_.type != Tok::RParen) {
                fail("expected ')' but found " + describe(tok_));
            }
            advance();
            return f;
        }
        fail("expected an atom, '~' or '(' but found " + describe(tok_));
    }

    // Position of the first `=>` (in source order) that breaks the strict rule.
    std::size_t first_offending(const Formula& f) const
    {
        std::vector<std::size_t> found;
        auto collect = [&](auto&& self, const Formula& g) -> void {
            if (g.kind() == Formula::Kind::MeaningImp) {
                found.push_back(positions_.at(g.node_.get()));
            }
            for (const auto& c : g.node_->children) {
                self(self, c);
            }
        };
        if (f.kind() == Formula::Kind::MeaningImp) {
            collect(collect, f.lhs());
            collect(collect, f.rhs());
        }
        else {
            collect(collect, f);
        }
        return *std::min_element(found.begin(), found.end());
    }

    std::string_view text_;
    std::size_t i_ = 0;
    Token tok_{Tok::End, 0, {}};
    std::unordered_map<const Formula::Node*, std::size_t> positions_;
};

} // namespace detail

Formula parse(std::string_view text, Mode mode)
{
    detail::FormulaParser parser(text);
    return parser.parse_all(mode);
}

// ---------------------------------------------------------------------------
// Printer

namespace {

int precedence(Formula::Kind k)
{
    switch (k) {
    case Formula::Kind::MeaningImp:
        return 1;
    case Formula::Kind::MaterialImp:
        return 2;
    case Formula::Kind::Or:
        return 3;
    case Formula::Kind::And:
        return 4;
    case Formula::Kind::Not:
    case Formula::Kind::Atom:
        return 5;
    }
    return 0;
}

std::string_view spelling(Formula::Kind k)
{
    switch (k) {
    case Formula::Kind::And:
        return " & ";
    case Formula::Kind::Or:
        return " | ";
    case Formula::Kind::MaterialImp:
        return " -> ";
    case Formula::Kind::MeaningImp:
        return " => ";
    default:
        return "";
    }
}

bool right_assoc(Formula::Kind k)
{
    return k == Formula::Kind::MaterialImp || k == Formula::Kind::MeaningImp;
}

void emit(const Formula& f, std::string& out);

void emit_child(const Formula& child, bool parens, std::string& out)
{
    if (parens) {
        out += '(';
    }
    emit(child, out);
    if (parens) {
        out += ')';
    }
}

void emit(const Formula& f, std::string& out)
{
    const auto k = f.kind();
    if (k == Formula::Kind::Atom) {
        out += f.name();
        return;
    }
    if (k == Formula::Kind::Not) {
        out += '~';
        emit_child(f.operand(), precedence(f.operand().kind()) < precedence(k), out);
        return;
    }
    const int p = precedence(k);
    const int lp = precedence(f.lhs().kind());
    const int rp = precedence(f.rhs().kind());
    emit_child(f.lhs(), right_assoc(k) ? lp <= p : lp < p, out);
    out += spelling(k);
    emit_child(f.rhs(), right_assoc(k) ? rp < p : rp <= p, out);
}

} // namespace

std::string format(const Formula& f)
{
    std::string out;
    emit(f, out);
    return out;
}

} // namespace vval
