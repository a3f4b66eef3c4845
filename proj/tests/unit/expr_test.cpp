#include "condinfo/entropy.hpp"
#include "condinfo/expr.hpp"
#include "condinfo/geometry.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace condinfo;

namespace {

// Random AST over `alphabet` with coefficients p/q, |p| <= 9, q <= 5.
ExprAst random_ast(std::mt19937_64& rng, const std::string& alphabet)
{
    std::uniform_int_distribution<int> terms(1, 5);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);

    auto random_list = [&](std::string& pool, bool allow_empty) {
        VarList out;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::uniform_int_distribution<std::size_t> len(allow_empty ? 0 : 1, std::min<std::size_t>(pool.size(), 3));
        const auto n = len(rng);
        for (std::size_t i = 0; i < n; ++i)
            out.push_back(pool[i]);
        return out;
    };

    ExprAst ast;
    const int n = terms(rng);
    for (int t = 0; t < n; ++t) {
        Rational k(num(rng), den(rng));
        k.canonicalize();
        std::string pool = alphabet;
        if (coin(rng)) {
            EntropyAtom a;
            a.target = random_list(pool, false);
            a.given = random_list(pool, true);
            ast.terms.push_back({k, a});
        } else {
            MutualAtom a;
            a.left = random_list(pool, false);
            a.right = random_list(pool, false);
            a.given = random_list(pool, true);
            ast.terms.push_back({k, a});
        }
    }
    return ast;
}

MeasureExpression reference_cmi(const std::vector<std::string>& names)
{
    // H(X,Z) + H(Y,Z) - H(X,Y,Z) - H(Z) with X=bit0, Y=bit1, Z=bit2
    MeasureExpression m(names);
    m.add(VarSet(0b101), 1);
    m.add(VarSet(0b110), 1);
    m.add(VarSet(0b111), -1);
    m.add(VarSet(0b100), -1);
    return m;
}

}  // namespace

TEST(Parse, ConditionalRightHandSide)
{
    const auto ast = parse_expression("I(C;D|A) + I(C;D|B) + I(A;B)", "ABCD");
    ASSERT_EQ(ast.terms.size(), 3u);
    const auto& first = std::get<MutualAtom>(ast.terms[0].atom);
    EXPECT_EQ(first.left, VarList{'C'});
    EXPECT_EQ(first.right, VarList{'D'});
    EXPECT_EQ(first.given, VarList{'A'});
    EXPECT_TRUE(std::get<MutualAtom>(ast.terms[2].atom).given.empty());
}

TEST(Parse, ConditionalEntropy)
{
    const auto ast = parse_expression("H(C|A,B)", "ABCD");
    ASSERT_EQ(ast.terms.size(), 1u);
    const auto& h = std::get<EntropyAtom>(ast.terms[0].atom);
    EXPECT_EQ(h.target, VarList{'C'});
    EXPECT_EQ(h.given, (VarList{'A', 'B'}));
    EXPECT_EQ(ast.terms[0].coefficient, 1);
}

TEST(Parse, WeightedTerms)
{
    const auto ast = parse_expression("2/3*H(A) - I(A;B)", "ABCD");
    ASSERT_EQ(ast.terms.size(), 2u);
    EXPECT_EQ(ast.terms[0].coefficient, Rational(2, 3));
    EXPECT_EQ(ast.terms[1].coefficient, -1);
}

TEST(Parse, WhitespaceInsensitive)
{
    EXPECT_EQ(parse_expression(" 2 / 3 * H ( A | B , C ) -I(A ;B)", "ABC"),
              parse_expression("2/3*H(A|B,C)-I(A;B)", "ABC"));
}

TEST(Parse, ErrorsCarryPositions)
{
    auto position_of = [](const char* text) {
        try {
            parse_expression(text, "ABCD");
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1L;
    };
    EXPECT_EQ(position_of("H(A,A)"), 4);   // repeated variable
    EXPECT_EQ(position_of("H(A|E)"), 4);   // unknown letter
    EXPECT_EQ(position_of("I(A,B)"), 5);   // missing ';'
    EXPECT_EQ(position_of("H(A) H(B)"), 5);
    EXPECT_EQ(position_of("1/0*H(A)"), 2);
    EXPECT_EQ(position_of("H()"), 2);
    EXPECT_EQ(position_of("2 H(A)"), 2);
    EXPECT_EQ(position_of("X(A)"), 0);
    EXPECT_EQ(position_of(""), 0);
    EXPECT_EQ(position_of("H(A"), 3);
}

TEST(Parse, AlphabetLimits)
{
    EXPECT_THROW(parse_expression("H(A)", "ABCDEF"), std::invalid_argument);
    EXPECT_THROW(parse_expression("H(A)", "AA"), std::invalid_argument);
    EXPECT_NO_THROW(parse_expression("H(Q)"));
}

TEST(Canonicalize, Definitions)
{
    const std::vector<std::string> xyz{"X", "Y", "Z"};
    MeasureExpression mi(xyz);
    mi.add(VarSet(1), 1);
    mi.add(VarSet(2), 1);
    mi.add(VarSet(3), -1);
    EXPECT_EQ(parse_measure("I(X;Y)", "XYZ"), mi);

    MeasureExpression cond(default_variable_names(4));
    cond.add(VarSet(0b0111), 1);
    cond.add(VarSet(0b0011), -1);
    EXPECT_EQ(parse_measure("H(C|A,B)", "ABCD"), cond);

    EXPECT_EQ(parse_measure("I(X;Y|Z)", "XYZ"), reference_cmi(xyz));
}

TEST(Canonicalize, Idempotent)
{
    const auto m = parse_measure("I(A;B|C) + 2*H(A|B) - 1/2*I(A,B;C)", "ABC");
    // Re-express the canonical form as plain H terms and canonicalize again.
    std::string text;
    for (const auto& [s, k] : m.coefficients()) {
        std::string letters;
        for (std::size_t i = 0; i < 3; ++i)
            if (s.contains(i))
                letters += (letters.empty() ? "" : ",") + std::string(1, "ABC"[i]);
        text += (k < 0 ? " - " : " + ") + to_string(Rational(abs(k))) + "*H(" + letters + ")";
    }
    EXPECT_EQ(parse_measure("0*H(A)" + text, "ABC"), m);
}

TEST(Canonicalize, CancelsToZero)
{
    EXPECT_TRUE(parse_measure("H(A)+H(B)-H(A,B) - I(A;B)", "AB").is_zero());
    EXPECT_TRUE(parse_measure("H(A|A)", "AB").is_zero());
}

TEST(StarExpression, ZeroKappa)
{
    EXPECT_EQ(star_expression(0), Rational(-1) * parse_measure("I(C;D)", "ABCD"));
    EXPECT_THROW(star_expression(-1), std::invalid_argument);
}

TEST(StarExpression, VanishesOnFourCopiesOfABit)
{
    // A = B = C = D: I(A;B) = I(C;D) = 1, the other five terms are 0.
    const JointDistribution dist(default_variable_names(4), {0, 0, 0, 0, 1, 1, 1, 1}, {1, 1});
    EXPECT_TRUE(eval_measure(entropy_vector(dist), star_expression(1)).is_zero());
}

TEST(StarExpression, KappaOneViolatedAtSeven)
{
    const auto v = entropy_vector(build_joint(FieldSize(7)));
    EXPECT_EQ(eval_measure(v, star_expression(1)).sign(), Sign::negative);
}

TEST(StarExpression, AffineInKappa)
{
    const auto s0 = star_expression(0);
    const auto s1 = star_expression(1);
    const Rational k(7, 3);
    EXPECT_EQ(star_expression(k), s0 + k * (s1 - s0));
}

TEST(ExprProperty, PrintParseRoundTripCorpus)
{
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 1000; ++i) {
        const auto ast = random_ast(rng, "ABCDE");
        const auto text = to_string(ast);
        const auto reparsed = parse_expression(text, "ABCDE");
        ASSERT_EQ(reparsed, ast) << text;
        EXPECT_EQ(to_string(reparsed), text);
    }
}

TEST(ExprProperty, CanonicalizeIsLinear)
{
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> num(-6, 6);
    for (int i = 0; i < 200; ++i) {
        const auto e1 = random_ast(rng, "ABCD");
        const auto e2 = random_ast(rng, "ABCD");
        Rational a(num(rng), 4);
        a.canonicalize();
        ExprAst combined;
        for (auto t : e1.terms) {
            t.coefficient *= a;
            combined.terms.push_back(t);
        }
        combined.terms.insert(combined.terms.end(), e2.terms.begin(), e2.terms.end());
        EXPECT_EQ(canonicalize(combined, "ABCD"), a * canonicalize(e1, "ABCD") + canonicalize(e2, "ABCD"));
    }
}

TEST(ExprProperty, MutualInformationSymmetric)
{
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        const auto ast = random_ast(rng, "ABCD");
        for (const auto& t : ast.terms) {
            const auto* mi = std::get_if<MutualAtom>(&t.atom);
            if (!mi)
                continue;
            ExprAst forward{{{1, *mi}}};
            ExprAst backward{{{1, MutualAtom{mi->right, mi->left, mi->given}}}};
            EXPECT_EQ(canonicalize(forward, "ABCD"), canonicalize(backward, "ABCD"));
        }
    }
}

TEST(ExprProperty, ConditionalMutualInformationNonnegative)
{
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<ValueId> value(0, 2);
    std::uniform_int_distribution<std::uint64_t> count(1, 9);
    const auto m = parse_measure("I(X;Y|Z)", "XYZ");
    for (int trial = 0; trial < 200; ++trial) {
        std::set<std::array<ValueId, 3>> seen;
        std::vector<ValueId> values;
        std::vector<std::uint64_t> counts;
        for (int r = 0; r < 10; ++r) {
            std::array<ValueId, 3> row{value(rng), value(rng), value(rng)};
            if (!seen.insert(row).second)
                continue;
            values.insert(values.end(), row.begin(), row.end());
            counts.push_back(count(rng));
        }
        const JointDistribution dist({"X", "Y", "Z"}, values, counts);
        EXPECT_NE(eval_measure(entropy_vector(dist), m).sign(), Sign::negative);
    }
}
