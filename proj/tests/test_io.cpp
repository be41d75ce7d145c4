#include <gtest/gtest.h>

#include "entcat/error.hpp"
#include "entcat/io.hpp"

namespace entcat {
namespace {

ErrorCode parse_code(const std::string& text) {
    try {
        parse_spectrum_json(text);
    } catch (const Error& e) {
        return e.code();
    }
    return static_cast<ErrorCode>(-1);
}

TEST(SpectrumJson, BothShapes) {
    EXPECT_EQ(parse_spectrum_json(R"({"coefficients": [0.1, 0.4, 0.4, 0.1]})"),
              make_spectrum({0.4, 0.4, 0.1, 0.1}));
    EXPECT_EQ(parse_spectrum_json("[0.25, 0.5, 0.25]"), make_spectrum({0.5, 0.25, 0.25}));
}

TEST(SpectrumJson, NormalizeFlag) {
    EXPECT_EQ(parse_spectrum_json("[3, 1]", true), make_spectrum({0.75, 0.25}));
    EXPECT_EQ(parse_code("[3, 1]"), ErrorCode::NotNormalized);
}

TEST(SpectrumJson, MalformedInput) {
    EXPECT_EQ(parse_code("[0.5, 0.5"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code(R"({"coeffs": [1]})"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code(R"({"coefficients": 1})"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code(R"(["a", 1])"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("7"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("[]"), ErrorCode::EmptyInput);
    EXPECT_EQ(parse_code("[1.2, -0.2]"), ErrorCode::NegativeEntry);
}

TEST(SpectrumJson, LiteralsKeepSourceText) {
    const auto lits = parse_spectrum_json_literals(R"({"coefficients": [0.4, 0.35, 1e-1, 15e-2, 0]})");
    EXPECT_EQ(lits, (std::vector<std::string>{"0.4", "0.35", "1e-1", "15e-2", "0"}));
    EXPECT_EQ(parse_spectrum_json_literals("[1, 0.0]"), (std::vector<std::string>{"1", "0.0"}));
    EXPECT_THROW(parse_spectrum_json_literals("[[0.5], 0.5]"), Error);
    EXPECT_THROW(parse_spectrum_json_literals(R"({"other": [1]})"), Error);
    EXPECT_THROW(parse_spectrum_json_literals("[true]"), Error);
}

TEST(SpectrumJson, RoundTrip) {
    const auto s = make_spectrum({0.5825, 0.4175});
    EXPECT_EQ(spectrum_to_json(s), R"({"coefficients":[0.5825,0.4175]})");
    EXPECT_EQ(parse_spectrum_json(spectrum_to_json(s)), s);
}

TEST(Formatting, NineSignificantDigits) {
    EXPECT_EQ(format_g9(0.7977968093128549), "0.797796809");
    EXPECT_EQ(format_g9(1.0), "1");
    EXPECT_EQ(format_g9(0.1 + 0.2), "0.3");
    EXPECT_DOUBLE_EQ(round_g9(0.1 + 0.2), 0.3);
}

TEST(Formatting, LandscapeCsv) {
    const std::vector<LandscapeRow> rows{{0.5, 0.5, 0.25, 0.5}, {1.0, 0.0, 0.125, 0.25}};
    EXPECT_EQ(landscape_csv(rows), "beta1,beta2,E_nats,E_ebits\n0.5,0.5,0.25,0.5\n1,0,0.125,0.25\n");
}

}  // namespace
}  // namespace entcat
