#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tvoa/scalar.hpp"

using namespace tvoa;

TEST_CASE("rational fast path") {
    Scalar a(1, 2), b(1, 3);
    CHECK((a + b) == Scalar(5, 6));
    CHECK((a - b) == Scalar(1, 6));
    CHECK((a * b) == Scalar(1, 6));
    CHECK((a / b) == Scalar(3, 2));
    CHECK((-a) == Scalar(-1, 2));
    CHECK(Scalar(2, -4) == Scalar(-1, 2));
    CHECK(Scalar(0, 5).is_zero());
    CHECK(a.str() == "1/2");
}

TEST_CASE("field axioms on mixed values") {
    // (x/y)*(y/x) = 1 for a few nonzero x, y including i and h
    std::vector<Scalar> vals = {Scalar(3, 7), Scalar::i(), Scalar::hbar(),
                                Scalar(2) + Scalar::i(), Scalar::hbar() + Scalar(1),
                                Scalar::hbar() * Scalar::i() - Scalar(5, 3)};
    for (const auto& x : vals)
        for (const auto& y : vals) {
            Scalar q = x / y;
            CHECK(q * (y / x) == Scalar(1));
            CHECK(q * y == x);
        }
}

TEST_CASE("i squares to -1 and i_pow resolves half powers") {
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK(Scalar::i_pow(2) == Scalar(-1));
    CHECK(Scalar::i_pow(1) == Scalar::i());
    CHECK(Scalar::i_pow(-1) == -Scalar::i());
    CHECK(Scalar::i_pow(4) == Scalar(1));
}

TEST_CASE("overflow promotes instead of wrapping") {
    Scalar big(1);
    for (int k = 0; k < 5; ++k) big *= Scalar(INT64_MAX / 3);
    Scalar back = big / (big / Scalar(7));
    CHECK(back == Scalar(7));
}

TEST_CASE("rational function reduction is canonical") {
    Scalar h = Scalar::hbar();
    // (h^2 - 1)/(h - 1) reduces to h + 1
    Scalar r = (h * h - Scalar(1)) / (h - Scalar(1));
    CHECK(r == h + Scalar(1));
    CHECK(r.str() == "(h + 1)");
    // h/h^2 = 1/h
    CHECK(h / (h * h) == h.inv());
    CHECK((h.pow(3) / h.pow(2)) == h);
}

TEST_CASE("substitution") {
    Scalar h = Scalar::hbar();
    Scalar e = (h * h + Scalar(1)) / h;
    CHECK(e.subst(0, Scalar(2)) == Scalar(5, 2));
}

TEST_CASE("serialization of gaussian rational functions") {
    Scalar v = (Scalar(1) + Scalar::i()) * Scalar::hbar() / Scalar(2);
    CHECK(v.str().find("i") != std::string::npos);
    CHECK(Scalar(5).str() == "5");
    CHECK((Scalar::hbar().inv()).str() == "1/h");
}
