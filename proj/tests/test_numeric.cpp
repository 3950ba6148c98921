#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dsf/numeric.hpp"

using namespace dsf;

TEST_CASE("half-integers")
{
    Half a = Half::from_twice(3), b(1);
    CHECK(a.str() == "3/2");
    CHECK((a + b).str() == "5/2");
    CHECK((a - b).str() == "1/2");
    CHECK(!a.is_integer());
    CHECK(Half(-4).as_int() == -4);
    CHECK(a.to_rational() == Rational(3, 2));
    CHECK(Half(2).to_rational() == Rational(2));
    CHECK(Half::from_rational(Rational(-7, 2)) == Half::from_twice(-7));
    CHECK_THROWS_AS(Half::from_rational(Rational(1, 3)), domain_error);
    CHECK(Half(1) < a);
}

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(rational_str(Rational(4, 2)) == "2");
    CHECK(rational_str(Rational(-1, 3)) == "-1/3");
    CHECK_THROWS_AS(parse_rational("x"), domain_error);
    CHECK_THROWS_AS(parse_rational("1/0"), domain_error);
}

TEST_CASE("checked arithmetic")
{
    CHECK(detail::checked_add(2, 3) == 5);
    CHECK_THROWS(detail::checked_mul(1LL << 40, 1LL << 40));
}

TEST_CASE("matrix rank")
{
    Matrix m(3, 3);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 0) = 2;
    m(1, 1) = 4;
    m(2, 2) = Rational(1, 3);
    CHECK(rank_of(m) == 2);
    CHECK(rank_of(Matrix::identity(4)) == 4);
    CHECK(rank_of(Matrix(2, 5)) == 0);
    Matrix p = m * Matrix::identity(3);
    CHECK(p == m);
    CHECK(rank_of({{1, 1}, {2, 2}, {0, 1}}, 2) == 2);
}
