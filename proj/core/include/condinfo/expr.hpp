#pragma once

#include "condinfo/measure.hpp"
#include "condinfo/rational.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace condinfo {

// Syntax or binding error with a 0-based character offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Variables as written, single letters, in source order.
using VarList = std::vector<char>;

// H(target | given); given may be empty.
struct EntropyAtom {
    VarList target;
    VarList given;
    friend bool operator==(const EntropyAtom&, const EntropyAtom&) = default;
};

// I(left ; right | given)
struct MutualAtom {
    VarList left;
    VarList right;
    VarList given;
    friend bool operator==(const MutualAtom&, const MutualAtom&) = default;
};

using Atom = std::variant<EntropyAtom, MutualAtom>;

struct Term {
    Rational coefficient;  // signed, sign folded in from the '+'/'-' separator
    Atom atom;
    friend bool operator==(const Term&, const Term&) = default;
};

struct ExprAst {
    std::vector<Term> terms;
    friend bool operator==(const ExprAst&, const ExprAst&) = default;
};

/// Parses the information-expression language:
///
///   expr     := ['-'] term (('+'|'-') term)*
///   term     := [rational '*'] atom
///   atom     := 'H(' vars ['|' vars] ')' | 'I(' vars ';' vars ['|' vars] ')'
///   vars     := letter (',' letter)*
///   rational := integer ['/' positive-integer]
///
/// Whitespace is ignored. Letters must belong to `alphabet` (at most five
/// distinct letters) and may not repeat within one vars list.
ExprAst parse_expression(std::string_view text, std::string_view alphabet);

// Same grammar with any letter admitted; bind later with canonicalize.
ExprAst parse_expression(std::string_view text);

// Inverse of parse_expression up to whitespace and unit coefficients.
std::string to_string(const ExprAst& ast);

// Expands H(S|T) = H(S u T) - H(T) and I(X;Y|Z) = H(XZ) + H(YZ) - H(XYZ) - H(Z).
// Variable i of the result is alphabet[i].
MeasureExpression canonicalize(const ExprAst& ast, std::string_view alphabet);

inline MeasureExpression parse_measure(std::string_view text, std::string_view alphabet)
{
    return canonicalize(parse_expression(text, alphabet), alphabet);
}

std::vector<std::string> alphabet_names(std::string_view alphabet);

// Letters used by the expression, sorted.
std::string letters_used(const ExprAst& ast);

/// kappa * [I(A;B|C) + I(A;B|D) + H(C|A,B) + I(C;D|A) + I(C;D|B) + I(A;B)] - I(C;D)
/// over A, B, C, D. The weak conditional statement would follow from an
/// unconditional inequality exactly when this is nonnegative on every entropic
/// vector for some kappa. Throws on kappa < 0.
MeasureExpression star_expression(const Rational& kappa);

// The star expression in DSL form.
std::string star_expression_text(const Rational& kappa);

}  // namespace condinfo
