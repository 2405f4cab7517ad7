#include <uqso/scalar.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

using namespace uqso;

namespace {
const DeformationParameter kP2{Rational(2)};
const DeformationParameter kP32{Rational(3, 2)};
const DeformationParameter kP5{Rational(5)};
const std::vector<DeformationParameter> kParams{kP2, kP32, kP5};
}  // namespace

TEST_CASE("half-integers", "[scalar]") {
    CHECK(HalfInt::whole(3).twice == 6);
    CHECK(HalfInt::halves(3).str() == "3/2");
    CHECK(HalfInt::whole(-2).str() == "-2");
    CHECK(HalfInt::parse("3/2") == HalfInt::halves(3));
    CHECK(HalfInt::parse("-5/2") == HalfInt::halves(-5));
    CHECK(HalfInt::parse("4") == HalfInt::whole(4));
    CHECK_THROWS_AS(HalfInt::parse("x"), ParseError);
    CHECK_THROWS_AS(HalfInt::parse("1/3"), ParseError);
    CHECK(HalfInt::halves(3).is_integer() == false);
    CHECK(HalfInt::whole(2).is_integer());
    CHECK((HalfInt::halves(1) + HalfInt::halves(1)) == HalfInt::whole(1));
}

TEST_CASE("scalar field arithmetic", "[scalar]") {
    Scalar a(Rational(1, 2), Rational(3));
    Scalar b(Rational(-2), Rational(1, 3));
    CHECK((a + b) - b == a);
    CHECK(a * b == b * a);
    CHECK((a / b) * b == a);
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK(a.conj().conj() == a);
    CHECK_THROWS_AS(a / Scalar(0), Error);
    CHECK(Scalar(Rational(1, 3)) + Scalar(Rational(1, 6)) == Scalar(Rational(1, 2)));
}

TEST_CASE("deformation parameter validation", "[scalar]") {
    CHECK_THROWS_AS(DeformationParameter(Rational(1)), InvalidParameter);
    CHECK_THROWS_AS(DeformationParameter(Rational(0)), InvalidParameter);
    CHECK_THROWS_AS(DeformationParameter(Rational(-2)), InvalidParameter);
    CHECK(DeformationParameter::parse("3/2").p() == Rational(3, 2));
    CHECK(kP2.q() == 4);
    CHECK(kP2.q_pow(HalfInt::halves(1)) == 2);   // q^{1/2} = p
    CHECK(kP2.q_pow(HalfInt::halves(-3)) == Rational(1, 8));
}

TEST_CASE("q-numbers: pinned values", "[scalar]") {
    // [0]_q = 0, [1]_q = 1 for every p
    for (const auto& d : kParams) {
        CHECK(q_number(HalfInt::whole(0), d) == Scalar(0));
        CHECK(q_number(HalfInt::whole(1), d) == Scalar(1));
    }
    // [2]_q at p=2 (q=4): (q^2-q^-2)/(q-q^-1) = q + q^-1 = 17/4
    CHECK(q_number(HalfInt::whole(2), kP2) == Scalar(Rational(17, 4)));
    CHECK(q_number(HalfInt::whole(2), kP2) ==
          Scalar(kP2.q() + rational_pow(kP2.q(), -1)));
    // [1/2]_+ at p=2: (2 + 1/2)/(4 - 1/4) = 2/3
    CHECK(q_plus_number(HalfInt::halves(1), kP2) == Scalar(Rational(2, 3)));
    // [0]_+ at p=2: 2/(15/4) = 8/15
    CHECK(q_plus_number(HalfInt::whole(0), kP2) == Scalar(Rational(8, 15)));
}

TEST_CASE("q-number parity and definition round-trip", "[scalar]") {
    for (const auto& d : kParams) {
        for (std::int64_t tw = -40; tw <= 40; ++tw) {
            HalfInt m{tw};
            CHECK(q_number(-m, d) == -q_number(m, d));
            CHECK(q_plus_number(-m, d) == q_plus_number(m, d));
            // [m]_q (q - q^{-1}) = q^m - q^{-m}
            CHECK(q_number(m, d) * Scalar(d.delta()) ==
                  Scalar(d.q_pow(m) - d.q_pow(-m)));
        }
    }
}

TEST_CASE("eigenvalue label values are collision-free", "[scalar]") {
    for (const auto& d : kParams) {
        std::set<Scalar> seen;
        for (std::int64_t tw = 0; tw <= 40; ++tw) {
            HalfInt m{tw};
            Scalar cl = Scalar::i() * q_number(m, d);
            CHECK(seen.insert(cl).second);
            if (tw > 0) CHECK(seen.insert(-cl).second);
            if (tw % 2 == 1) {
                Scalar nc = q_plus_number(m, d);
                CHECK(seen.insert(nc).second);
                CHECK(seen.insert(-nc).second);
            }
        }
    }
}

TEST_CASE("classify_eigenvalue", "[scalar]") {
    const HalfInt bound = HalfInt::whole(4);
    SECTION("pinned examples") {
        auto zero = classify_eigenvalue(Scalar(0), bound, kP2);
        REQUIRE(zero.has_value());
        CHECK(*zero == EigenLabel::classical(HalfInt::whole(0)));

        auto two = classify_eigenvalue(Scalar::i() * Scalar(Rational(17, 4)), bound, kP2);
        REQUIRE(two.has_value());
        CHECK(*two == EigenLabel::classical(HalfInt::whole(2)));

        auto nch = classify_eigenvalue(Scalar(Rational(-2, 3)), bound, kP2);
        REQUIRE(nch.has_value());
        CHECK(*nch == EigenLabel::nonclassical(HalfInt::halves(1), -1));

        CHECK_FALSE(classify_eigenvalue(Scalar(Rational(7, 13)), bound, kP2).has_value());
    }
    SECTION("round-trip identity over the scan range") {
        for (const auto& d : kParams) {
            for (std::int64_t tw = -8; tw <= 8; ++tw) {
                HalfInt m{tw};
                auto cl = classify_eigenvalue(Scalar::i() * q_number(m, d), bound, d);
                REQUIRE(cl.has_value());
                CHECK(*cl == EigenLabel::classical(m));
                if (tw > 0 && tw % 2 == 1) {
                    for (int sign : {+1, -1}) {
                        auto nc = classify_eigenvalue(Scalar(sign) * q_plus_number(m, d), bound, d);
                        REQUIRE(nc.has_value());
                        CHECK(*nc == EigenLabel::nonclassical(m, sign));
                    }
                }
            }
        }
    }
    SECTION("bound validation") {
        CHECK_THROWS_AS(classify_eigenvalue(Scalar(0), HalfInt::whole(-1), kP2),
                        InvalidParameter);
    }
}
