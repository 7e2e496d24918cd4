#pragma once

#include <array>
#include <string>

#include "bianchi/gaussian.hpp"

namespace bianchi {

// Algebraic integer in Z[zeta_12], coordinates over the power basis
// 1, z, z^2, z^3 with z^4 = z^2 - 1 (so z^6 = -1).  Contains i = z^3 and
// omega = z^4; enough for every character value that occurs here.
struct Cyc12 {
    std::array<Int, 4> c{};  // c0 + c1 z + c2 z^2 + c3 z^3

    Cyc12() = default;
    explicit Cyc12(Int n) { c[0] = std::move(n); }
    static Cyc12 integer(long n) { return Cyc12(Int(n)); }
    static Cyc12 zeta_pow(int e);            // z^e, any integer e
    static Cyc12 zeta(int n, int k);         // zeta_n^k for n | 12
    static Cyc12 omega() { return zeta(3, 1); }
    static Cyc12 imaginary_unit() { return zeta(4, 1); }

    friend Cyc12 operator+(const Cyc12& x, const Cyc12& y);
    friend Cyc12 operator-(const Cyc12& x, const Cyc12& y);
    friend Cyc12 operator*(const Cyc12& x, const Cyc12& y);
    Cyc12 operator-() const;
    Cyc12 conj() const;  // complex conjugation z -> z^{-1}

    bool operator==(const Cyc12&) const = default;
    bool is_rational_integer() const { return c[1] == 0 && c[2] == 0 && c[3] == 0; }

    std::string str() const;
};

}  // namespace bianchi
