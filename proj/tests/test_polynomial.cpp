#include "lpm/polynomial.hpp"

#include <doctest.h>

#include <stdexcept>

using lpm::Int;
using lpm::IntPolynomial;
using lpm::LaurentPolynomial;

TEST_CASE("polynomial normalization and degree") {
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(IntPolynomial{Int(0), Int(0)}.is_zero());
  IntPolynomial p{Int(1), Int(2), Int(0)};
  CHECK(p.degree() == 1);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 2);
  CHECK(p.coeff(2) == 0);
  CHECK(p.coeff(-1) == 0);
}

TEST_CASE("polynomial ring operations") {
  IntPolynomial a{Int(1), Int(1)};            // 1 + x
  IntPolynomial b{Int(-1), Int(0), Int(1)};  // x^2 - 1
  CHECK(a + b == IntPolynomial{Int(0), Int(1), Int(1)});
  CHECK(b - a == IntPolynomial{Int(-2), Int(-1), Int(1)});
  CHECK(a * a == IntPolynomial{Int(1), Int(2), Int(1)});
  CHECK(a * b == IntPolynomial{Int(-1), Int(-1), Int(1), Int(1)});
  CHECK(a * Int(3) == IntPolynomial{Int(3), Int(3)});
  CHECK(a * Int(0) == IntPolynomial{});
  CHECK((a - a).is_zero());
}

TEST_CASE("monomial and binomial powers") {
  CHECK(IntPolynomial::monomial(Int(5), 3) == IntPolynomial{Int(0), Int(0), Int(0), Int(5)});
  CHECK_THROWS_AS(IntPolynomial::monomial(Int(1), -1), std::invalid_argument);
  CHECK(lpm::power_of_x_plus(Int(1), 4) ==
        IntPolynomial{Int(1), Int(4), Int(6), Int(4), Int(1)});
  CHECK(lpm::power_of_x_plus(Int(-1), 2) == IntPolynomial{Int(1), Int(-2), Int(1)});
  CHECK(lpm::power_of_x_plus(Int(2), 0) == IntPolynomial{Int(1)});
}

TEST_CASE("composition with x + a") {
  IntPolynomial p{Int(0), Int(0), Int(1)};  // x^2
  CHECK(p.shifted(Int(1)) == IntPolynomial{Int(1), Int(2), Int(1)});
  IntPolynomial q{Int(1), Int(2), Int(2), Int(1)};
  // q(x - 1) then back again is the identity.
  CHECK(q.shifted(Int(-1)).shifted(Int(1)) == q);
  // evaluate via shift: q(x+2) at x = 0 equals q(2).
  CHECK(q.shifted(Int(2)).coeff(0) == 1 + 2 * 2 + 2 * 4 + 8);
}

TEST_CASE("polynomial rendering") {
  CHECK(IntPolynomial{}.to_string() == "0");
  CHECK(IntPolynomial{Int(1), Int(2), Int(2), Int(1)}.to_string() == "1 + 2x + 2x^2 + x^3");
  CHECK(IntPolynomial{Int(0), Int(-1)}.to_string() == "-x");
  CHECK(IntPolynomial{Int(3), Int(0), Int(-7)}.to_string() == "3 - 7x^2");
  CHECK(IntPolynomial{Int(-1), Int(1)}.to_string() == "-1 + x");
}

TEST_CASE("laurent normalization trims both ends") {
  LaurentPolynomial z(5, {Int(0), Int(0)});
  CHECK(z.is_zero());
  CHECK(z.min_degree() == 0);
  LaurentPolynomial p(-2, {Int(0), Int(3), Int(0), Int(1), Int(0)});
  CHECK(p.min_degree() == -1);
  CHECK(p.max_degree() == 1);
  CHECK(p.coeff(-1) == 3);
  CHECK(p.coeff(0) == 0);
  CHECK(p.coeff(1) == 1);
  CHECK(p.coeff(-2) == 0);
  CHECK(p.coeff(2) == 0);
}

TEST_CASE("laurent arithmetic aligns supports") {
  LaurentPolynomial a(-1, {Int(2), Int(5)});  // 2x^-1 + 5
  LaurentPolynomial b(1, {Int(4), Int(1)});   // 4x + x^2
  LaurentPolynomial s = a + b;
  CHECK(s.min_degree() == -1);
  CHECK(s.max_degree() == 2);
  CHECK(s.coeff(-1) == 2);
  CHECK(s.coeff(0) == 5);
  CHECK(s.coeff(1) == 4);
  CHECK(s.coeff(2) == 1);
  CHECK((s - b) == a);
  CHECK((a - a).is_zero());

  LaurentPolynomial prod = LaurentPolynomial::monomial(Int(2), -3) *
                           LaurentPolynomial::monomial(Int(3), 5);
  CHECK(prod == LaurentPolynomial::monomial(Int(6), 2));
}

TEST_CASE("laurent shifts by powers of x") {
  LaurentPolynomial p(0, {Int(1), Int(1)});  // 1 + x
  LaurentPolynomial q = p.times_x_power(-1);
  CHECK(q.min_degree() == -1);
  CHECK(q.coeff(-1) == 1);
  CHECK(q.coeff(0) == 1);
  CHECK(q.times_x_power(1) == p);
  CHECK(LaurentPolynomial().times_x_power(-4).is_zero());
}

TEST_CASE("laurent embeds ordinary polynomials") {
  IntPolynomial p{Int(1), Int(2)};
  LaurentPolynomial lp(p);
  CHECK(lp.min_degree() == 0);
  CHECK(lp.coeff(1) == 2);
  CHECK(lp.to_string() == "1 + 2x");
}

TEST_CASE("laurent rendering covers negative exponents") {
  LaurentPolynomial p(-1, {Int(2), Int(5), Int(4), Int(1)});
  CHECK(p.to_string() == "2x^-1 + 5 + 4x + x^2");
  CHECK(LaurentPolynomial().to_string() == "0");
  CHECK(LaurentPolynomial::monomial(Int(-1), -2).to_string() == "-x^-2");
  CHECK(LaurentPolynomial::monomial(Int(1), 0).to_string() == "1");
}
