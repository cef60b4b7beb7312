#include <gtest/gtest.h>

#include "mocklie/document.hpp"

using namespace mocklie;

namespace {

const Field Q = Field::rationals();

ParseError parse_error(std::string_view text)
{
    try {
        parse_algebra(text);
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "no parse error for:\n" << text;
    return ParseError(0, 0, "");
}

}  // namespace

TEST(Parse, CatalogExamples)
{
    const Algebra a12 = parse_algebra("field rational\ndim 2\ne1 * e1 = e2\n");
    EXPECT_EQ(a12.tensor, catalog_entry("A_{1,2}").tensor);
    EXPECT_EQ(a12.name, "L");

    const Algebra a24 = parse_algebra("dim 4\ne1*e1 = e2\ne3*e4 = e2\n");
    EXPECT_EQ(a24.tensor, catalog_entry("A_{2,4}").tensor);
    EXPECT_EQ(a24.tensor.coeff(3, 2, 1), Scalar::one(Q));
}

TEST(Parse, TermsAndCoefficients)
{
    const Algebra a = parse_algebra(
        "# comment line\n"
        "field gf 7   # trailing comment\n"
        "dim 3\n"
        "name sample\n"
        "e1 * e2 = 3 e1 - 2*e3 + e2\n"
        "e3 * e3 = -e1\n"
        "e2 * e2 = 0\n");
    const Field f = Field::prime(7);
    EXPECT_EQ(a.name, "sample");
    EXPECT_EQ(a.field(), f);
    EXPECT_EQ(a.tensor.coeff(0, 1, 0), Scalar::from_int(f, 3));
    EXPECT_EQ(a.tensor.coeff(1, 0, 2), Scalar::from_int(f, -2));
    EXPECT_EQ(a.tensor.coeff(0, 1, 1), Scalar::one(f));
    EXPECT_EQ(a.tensor.coeff(2, 2, 0), Scalar::from_int(f, 6));
    EXPECT_TRUE(a.tensor.product(1, 1).empty() || is_zero(a.tensor.product(1, 1)));
}

TEST(Parse, RepeatedTermsAccumulateAndZeroIsNotStored)
{
    const Algebra a = parse_algebra("dim 2\ne1 * e1 = e2 - e2\ne1 * e2 = 1/2 e1 + 1/2 e1\n");
    EXPECT_EQ(a.tensor.entries().size(), 2u);
    EXPECT_EQ(a.tensor.coeff(0, 1, 0), Scalar::one(Q));
}

TEST(Parse, SymmetricDirective)
{
    const Algebra off = parse_algebra("dim 2\nsymmetric off\ne1 * e2 = e1\n");
    EXPECT_EQ(off.tensor.coeff(0, 1, 0), Scalar::one(Q));
    EXPECT_TRUE(off.tensor.coeff(1, 0, 0).is_zero());

    // The explicit (2,1) statement wins over the mirror of (1,2).
    const Algebra explicit_wins = parse_algebra("dim 2\ne1 * e2 = e1\ne2 * e1 = e2\n");
    EXPECT_EQ(explicit_wins.tensor.coeff(0, 1, 0), Scalar::one(Q));
    EXPECT_TRUE(explicit_wins.tensor.coeff(1, 0, 0).is_zero());
    EXPECT_EQ(explicit_wins.tensor.coeff(1, 0, 1), Scalar::one(Q));
}

TEST(Parse, ErrorsCarryPositions)
{
    const ParseError big = parse_error("dim 2\ne1 * e3 = e1\n");
    EXPECT_EQ(big.line(), 2u);
    EXPECT_EQ(big.column(), 6u);
    EXPECT_EQ(big.message(), "index 3 exceeds dim 2");
    EXPECT_STREQ(big.what(), "line 2, column 6: index 3 exceeds dim 2");

    const ParseError dup = parse_error("dim 2\ne1 * e1 = e2\ne1 * e1 = e1\n");
    EXPECT_EQ(dup.line(), 3u);
    EXPECT_NE(dup.message().find("already given on line 2"), std::string::npos);

    EXPECT_EQ(parse_error("e1 * e1 = e2\n").line(), 1u);
    EXPECT_NE(parse_error("dim 2\nfield rational\n").message().find("before 'dim'"), std::string::npos);
    EXPECT_EQ(parse_error("field gf 9\ndim 2\n").line(), 1u);
    EXPECT_EQ(parse_error("dim 2\ne1 * e1 = 1/ e2\n").line(), 2u);
    EXPECT_EQ(parse_error("dim 2\ne1 * e1 = e2 e1\n").line(), 2u);
    EXPECT_EQ(parse_error("dim 2\ne1 * e1 =\n").line(), 2u);
    EXPECT_EQ(parse_error("frobnicate\n").line(), 1u);
    EXPECT_EQ(parse_error("# nothing\n").message(), "missing 'dim'");
    EXPECT_EQ(parse_error("dim 2\ne0 * e1 = e1\n").message(), "index 0 exceeds dim 2");
    EXPECT_EQ(parse_error("field gf 5\ndim 1\ne1 * e1 = 1/5 e1\n").line(), 3u);
}

TEST(Parse, FieldOverride)
{
    const Field f = Field::prime(5);
    const Algebra a = parse_algebra("dim 2\ne1 * e1 = 7 e2\n", f);
    EXPECT_EQ(a.field(), f);
    EXPECT_EQ(a.tensor.coeff(0, 0, 1), Scalar::from_int(f, 2));
    EXPECT_THROW(parse_algebra("dim 2\ne1 * e1 = 1/2 e2\n", f), ParseError);
    // An override reduces to zero; the product disappears.
    EXPECT_TRUE(parse_algebra("dim 2\ne1 * e1 = 5 e2\n", f).tensor.entries().empty());
}

TEST(Serialize, CanonicalText)
{
    StructureTensor t(Q, 4);
    t.set(0, 2, 1, Scalar::one(Q));
    t.set(0, 2, 3, Scalar::parse(Q, "-1/2"));
    t.set(1, 1, 0, Scalar::from_int(Q, -3));
    const std::string text = serialize_algebra({"X", t});
    EXPECT_EQ(text,
              "# format 1\n"
              "field rational\n"
              "dim 4\n"
              "name X\n"
              "symmetric off\n"
              "e1 * e3 = e2 - 1/2 e4\n"
              "e2 * e2 = -3 e1\n");
}

TEST(Serialize, RoundTripsCatalogByteForByte)
{
    for (const auto& a : catalog()) {
        const std::string text = serialize_algebra(a);
        const Algebra back = parse_algebra(text);
        EXPECT_EQ(back.tensor, a.tensor) << a.name;
        EXPECT_EQ(back.name, a.name);
        EXPECT_EQ(serialize_algebra(back), text);
    }
    const Algebra gf{"g", catalog_entry("A_{1,4}").tensor.to_field(Field::prime(11))};
    EXPECT_EQ(parse_algebra(serialize_algebra(gf)).tensor, gf.tensor);
}
