#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bianchi/errors.hpp"

namespace bianchi {

using Int = boost::multiprecision::cpp_int;

// Element of Z[i].
struct GaussianInt {
    Int re{0};
    Int im{0};

    GaussianInt() = default;
    GaussianInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
    GaussianInt(long r, long i) : re(r), im(i) {}

    friend GaussianInt operator+(const GaussianInt& z, const GaussianInt& w) {
        return {z.re + w.re, z.im + w.im};
    }
    friend GaussianInt operator-(const GaussianInt& z, const GaussianInt& w) {
        return {z.re - w.re, z.im - w.im};
    }
    friend GaussianInt operator*(const GaussianInt& z, const GaussianInt& w) {
        return {z.re * w.re - z.im * w.im, z.re * w.im + z.im * w.re};
    }
    GaussianInt operator-() const { return {-re, -im}; }
    GaussianInt conj() const { return {re, -im}; }

    bool operator==(const GaussianInt&) const = default;
    // Lexicographic on (re, im); used for canonical orderings throughout.
    std::strong_ordering operator<=>(const GaussianInt& o) const {
        if (re != o.re) return re < o.re ? std::strong_ordering::less : std::strong_ordering::greater;
        if (im != o.im) return im < o.im ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_unit() const { return (re == 0 && (im == 1 || im == -1)) || (im == 0 && (re == 1 || re == -1)); }
};

inline Int norm(const GaussianInt& z) { return z.re * z.re + z.im * z.im; }

// d | z in Z[i].
bool divides(const GaussianInt& d, const GaussianInt& z);

enum class SplittingClass { Ramified, Inert, Split };

std::string to_string(SplittingClass c);

struct GaussianPrime {
    GaussianInt value;
    SplittingClass splitting_class;
};

// Classifies an irreducible element; throws NotPrime for units, zero and
// composites (composites come with a witness factor in the message).
GaussianPrime classify_prime(const GaussianInt& z);

// Canonical representative of z modulo p.  Quotient = rounding z/p to the
// nearest Gaussian integer on both coordinates; on a rounding tie the
// candidate remainder with minimal norm, then maximal re, then maximal im
// wins.  Ties only occur for the even prime.
GaussianInt reduce(const GaussianInt& z, const GaussianPrime& p);

// The canonical residue system mod p: exactly norm(p) elements, fixed points
// of reduce(), sorted by (norm, re, im) so that 0 comes first.
std::vector<GaussianInt> residues(const GaussianPrime& p);

// "a+bi" / "a-bi" / "bi" / "a" formatting.
std::string to_string(const GaussianInt& z);

// Parses the same grammar, whitespace-insensitive.  Throws ParseError.
GaussianInt parse_gaussian(std::string_view s);

std::size_t hash_value(const GaussianInt& z);

}  // namespace bianchi
