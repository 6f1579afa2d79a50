#include "mbcount/format.hpp"

#include "mbcount/counting.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace mbcount;

TEST_CASE("render_decimal basics") {
  CHECK(render_decimal(ExactRatio(5, 3), 12) == "1.66666666667");
  CHECK(render_decimal(ExactRatio(1, 1), 12) == "1.0");
  CHECK(render_decimal(ExactRatio(543, 153), 12) == "3.54901960784");
  CHECK(render_decimal(ExactRatio(25, 15), 12) == "1.66666666667");
  CHECK(render_decimal(ExactRatio(6, 3), 4) == "2.0");
  CHECK(render_decimal(ExactRatio(1, 2), 3) == "0.500");
  CHECK(render_decimal(ExactRatio(1, 3), 4) == "0.3333");
  CHECK(render_decimal(ExactRatio(1, 300), 3) == "0.00333");
  CHECK(render_decimal(ExactRatio(-5, 3), 3) == "-1.67");
  CHECK_THROWS_AS(render_decimal(ExactRatio(5, 3), 0), std::domain_error);
}

TEST_CASE("render_decimal rounds half to even") {
  CHECK(render_decimal(ExactRatio(25, 10), 1) == "2");   // 2.5 -> even 2
  CHECK(render_decimal(ExactRatio(35, 10), 1) == "4");   // 3.5 -> even 4
  CHECK(render_decimal(ExactRatio(125, 100), 2) == "1.2");
  CHECK(render_decimal(ExactRatio(135, 100), 2) == "1.4");
  CHECK(render_decimal(ExactRatio(1251, 1000), 2) == "1.3");  // above half
}

TEST_CASE("render_decimal with more integer digits than significance") {
  CHECK(render_decimal(ExactRatio(1234567, 10), 3) == "123000");
  CHECK(render_decimal(ExactRatio(9999, 10), 2) == "1000");
  // integer-valued quotients keep the .0 marker regardless of size
  CHECK(render_decimal(ExactRatio(123456, 1), 3) == "123456.0");
}

TEST_CASE("render_decimal carries across the point") {
  // 9.9995 at 4 digits becomes 10.00 with the point shifted
  CHECK(render_decimal(ExactRatio(99995, 10000), 4) == "10.00");
  CHECK(render_decimal(ExactRatio(995, 10000), 2) == "0.10");  // 0.0995
  CHECK(render_decimal(ExactRatio(95, 100), 1) == "1");
}

TEST_CASE("render_scientific basics") {
  CHECK(render_scientific(ExactCount(1), 6) == "1.000000E+000");
  CHECK(render_scientific(ExactCount(29281), 6) == "2.928100E+004");
  CHECK(render_scientific(ExactCount(29281), 2) == "2.93E+004");
  CHECK(render_scientific(ExactCount(29281), 0) == "3E+004");
  CHECK(render_scientific(ExactCount("1867660000000000000000000000000"), 6) ==
        "1.867660E+030");
  CHECK_THROWS_AS(render_scientific(ExactCount(0), 6), std::domain_error);
  CHECK_THROWS_AS(render_scientific(ExactCount(-5), 6), std::domain_error);
  CHECK_THROWS_AS(render_scientific(ExactCount(5), -1), std::domain_error);
}

TEST_CASE("render_scientific rounds half to even and carries") {
  CHECK(render_scientific(ExactCount(25), 0) == "2E+001");
  CHECK(render_scientific(ExactCount(35), 0) == "4E+001");
  CHECK(render_scientific(ExactCount(999999995), 1) == "1.0E+009");
  CHECK(render_scientific(ExactCount(994), 1) == "9.9E+002");
  CHECK(render_scientific(ExactCount(996), 1) == "1.0E+003");
}

TEST_CASE("render_scientific widens the exponent field past 999") {
  MemoTable memo;
  // BN(200) has a four-digit exponent; the field grows instead of clipping.
  std::string text = render_scientific(bn_count(200, memo), 6);
  CHECK(text.find('E') != std::string::npos);
  std::string exp = text.substr(text.find('E') + 1);
  CHECK(exp.size() == 5);  // sign plus four digits
  CHECK(exp[0] == '+');
}

TEST_CASE("group_thousands") {
  CHECK(group_thousands("1") == "1");
  CHECK(group_thousands("999") == "999");
  CHECK(group_thousands("1000") == "1,000");
  CHECK(group_thousands("29281") == "29,281");
  CHECK(group_thousands("521939651343829405020504063") ==
        "521,939,651,343,829,405,020,504,063");
  CHECK(group_thousands("4564381.36751") == "4,564,381.36751");
  CHECK(group_thousands("1114.38472522") == "1,114.38472522");
  CHECK(group_thousands("-1234.5") == "-1,234.5");
  CHECK(group_thousands("1.0") == "1.0");
  CHECK(group_thousands("") == "");
}
