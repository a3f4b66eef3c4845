#include "condinfo/expr.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace condinfo {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("at position " + std::to_string(position) + ": " + message), position_(position)
{
}

namespace {

void check_alphabet(std::string_view alphabet)
{
    if (alphabet.empty() || alphabet.size() > kMaxVariables)
        throw std::invalid_argument("alphabet must have between 1 and 5 letters");
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        if (!std::isalpha(static_cast<unsigned char>(alphabet[i])))
            throw std::invalid_argument(std::string("alphabet entry '") + alphabet[i] + "' is not a letter");
        if (alphabet.find(alphabet[i], i + 1) != std::string_view::npos)
            throw std::invalid_argument(std::string("alphabet repeats '") + alphabet[i] + "'");
    }
}

class Parser {
public:
    Parser(std::string_view text, std::optional<std::string_view> alphabet) : text_(text), alphabet_(alphabet) {}

    ExprAst parse()
    {
        ExprAst ast;
        skip_space();
        Rational sign = 1;
        if (peek() == '-') {
            ++pos_;
            sign = -1;
        }
        ast.terms.push_back(term(sign));
        for (skip_space(); !at_end(); skip_space()) {
            const char op = peek();
            if (op != '+' && op != '-')
                fail("expected '+' or '-'");
            ++pos_;
            ast.terms.push_back(term(op == '-' ? -1 : 1));
        }
        return ast;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    void expect(char c)
    {
        skip_space();
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string digits()
    {
        skip_space();
        const auto start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    Term term(const Rational& sign)
    {
        skip_space();
        Rational coefficient = sign;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Rational weight{BigInt{digits()}};
            skip_space();
            if (peek() == '/') {
                ++pos_;
                const auto where = pos_;
                BigInt den{digits()};
                if (den == 0)
                    throw ParseError(where, "denominator must be positive");
                weight /= Rational(den);
            }
            expect('*');
            coefficient *= weight;
        }
        return {coefficient, atom()};
    }

    Atom atom()
    {
        skip_space();
        const char head = peek();
        if (head != 'H' && head != 'I')
            fail("expected H( or I(");
        ++pos_;
        expect('(');
        if (head == 'H') {
            EntropyAtom a;
            a.target = vars();
            skip_space();
            if (peek() == '|') {
                ++pos_;
                a.given = vars();
            }
            expect(')');
            return a;
        }
        MutualAtom a;
        a.left = vars();
        expect(';');
        a.right = vars();
        skip_space();
        if (peek() == '|') {
            ++pos_;
            a.given = vars();
        }
        expect(')');
        return a;
    }

    VarList vars()
    {
        VarList out;
        for (;;) {
            skip_space();
            const char c = peek();
            if (!std::isalpha(static_cast<unsigned char>(c)))
                fail("expected a variable letter");
            if (alphabet_ && alphabet_->find(c) == std::string_view::npos)
                fail(std::string("unknown variable '") + c + "'");
            if (std::find(out.begin(), out.end(), c) != out.end())
                fail(std::string("variable '") + c + "' repeated in one list");
            out.push_back(c);
            ++pos_;
            skip_space();
            if (peek() != ',')
                return out;
            ++pos_;
        }
    }

    std::string_view text_;
    std::optional<std::string_view> alphabet_;
    std::size_t pos_ = 0;
};

std::string join(const VarList& vars)
{
    std::string out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i > 0)
            out += ',';
        out += vars[i];
    }
    return out;
}

VarSet to_varset(const VarList& vars, std::string_view alphabet)
{
    VarSet s;
    for (char c : vars) {
        const auto idx = alphabet.find(c);
        if (idx == std::string_view::npos)
            throw std::invalid_argument(std::string("variable '") + c + "' not in alphabet");
        s = s | VarSet::single(idx);
    }
    return s;
}

}  // namespace

std::vector<std::string> alphabet_names(std::string_view alphabet)
{
    check_alphabet(alphabet);
    std::vector<std::string> names;
    for (char c : alphabet)
        names.emplace_back(1, c);
    return names;
}

ExprAst parse_expression(std::string_view text, std::string_view alphabet)
{
    check_alphabet(alphabet);
    return Parser(text, alphabet).parse();
}

ExprAst parse_expression(std::string_view text)
{
    return Parser(text, std::nullopt).parse();
}

std::string to_string(const ExprAst& ast)
{
    std::ostringstream out;
    bool first = true;
    for (const auto& t : ast.terms) {
        const bool negative = t.coefficient < 0;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        const Rational weight = abs(t.coefficient);
        if (weight != 1)
            out << to_string(weight) << '*';
        if (const auto* h = std::get_if<EntropyAtom>(&t.atom)) {
            out << "H(" << join(h->target);
            if (!h->given.empty())
                out << '|' << join(h->given);
        } else {
            const auto& i = std::get<MutualAtom>(t.atom);
            out << "I(" << join(i.left) << ';' << join(i.right);
            if (!i.given.empty())
                out << '|' << join(i.given);
        }
        out << ')';
        first = false;
    }
    return out.str();
}

MeasureExpression canonicalize(const ExprAst& ast, std::string_view alphabet)
{
    const auto names = alphabet_names(alphabet);
    MeasureExpression out(names);
    for (const auto& t : ast.terms) {
        MeasureExpression piece = std::visit(
            [&](const auto& a) {
                using A = std::decay_t<decltype(a)>;
                if constexpr (std::is_same_v<A, EntropyAtom>)
                    return entropy_term(names, to_varset(a.target, alphabet), to_varset(a.given, alphabet));
                else
                    return mutual_term(names, to_varset(a.left, alphabet), to_varset(a.right, alphabet),
                                       to_varset(a.given, alphabet));
            },
            t.atom);
        out += t.coefficient * std::move(piece);
    }
    return out;
}

std::string letters_used(const ExprAst& ast)
{
    std::string out;
    auto note = [&](const VarList& vars) {
        for (char c : vars)
            if (out.find(c) == std::string::npos)
                out += c;
    };
    for (const auto& t : ast.terms) {
        if (const auto* h = std::get_if<EntropyAtom>(&t.atom)) {
            note(h->target);
            note(h->given);
        } else {
            const auto& i = std::get<MutualAtom>(t.atom);
            note(i.left);
            note(i.right);
            note(i.given);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string star_expression_text(const Rational& kappa)
{
    if (kappa < 0)
        throw std::invalid_argument("kappa must be nonnegative");
    if (kappa == 0)
        return "-I(C;D)";
    const std::string k = kappa == 1 ? "" : to_string(kappa) + "*";
    return k + "I(A;B|C) + " + k + "I(A;B|D) + " + k + "H(C|A,B) + " + k + "I(C;D|A) + " + k + "I(C;D|B) + " +
           k + "I(A;B) - I(C;D)";
}

MeasureExpression star_expression(const Rational& kappa)
{
    return parse_measure(star_expression_text(kappa), "ABCD");
}

}  // namespace condinfo
