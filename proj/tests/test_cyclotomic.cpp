#include <doctest.h>

#include "bianchi/cyclotomic.hpp"

using namespace bianchi;

TEST_CASE("power relations") {
    Cyc12 z = Cyc12::zeta_pow(1);
    Cyc12 acc(Int(1));
    for (int k = 1; k <= 12; ++k) {
        acc = acc * z;
        CHECK(acc == Cyc12::zeta_pow(k));
    }
    CHECK(Cyc12::zeta_pow(12) == Cyc12::integer(1));
    CHECK(Cyc12::zeta_pow(6) == -Cyc12::integer(1));
    CHECK(Cyc12::zeta_pow(-1) * z == Cyc12::integer(1));
}

TEST_CASE("omega and i") {
    Cyc12 w = Cyc12::omega();
    CHECK(w * w * w == Cyc12::integer(1));
    CHECK(w * w + w + Cyc12::integer(1) == Cyc12());  // 1 + w + w^2 = 0
    Cyc12 i = Cyc12::imaginary_unit();
    CHECK(i * i == -Cyc12::integer(1));
    CHECK(i.conj() == -i);
    CHECK(w.conj() == w * w);
}

TEST_CASE("conjugation is an involution and fixes rationals") {
    for (int e = 0; e < 12; ++e) {
        Cyc12 z = Cyc12::zeta_pow(e);
        CHECK(z.conj().conj() == z);
        CHECK(z * z.conj() == Cyc12::integer(1));
    }
    CHECK(Cyc12::integer(-5).conj() == Cyc12::integer(-5));
}

TEST_CASE("subfield embeddings agree") {
    CHECK(Cyc12::zeta(3, 1) == Cyc12::zeta_pow(4));
    CHECK(Cyc12::zeta(4, 1) == Cyc12::zeta_pow(3));
    CHECK(Cyc12::zeta(2, 1) == -Cyc12::integer(1));
    CHECK(Cyc12::zeta(1, 0) == Cyc12::integer(1));
    CHECK(Cyc12::zeta(4, 2) == -Cyc12::integer(1));
}
