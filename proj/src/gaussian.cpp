#include "bianchi/gaussian.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

namespace bianchi {

bool divides(const GaussianInt& d, const GaussianInt& z) {
    Int n = norm(d);
    if (n == 0) return z.is_zero();
    GaussianInt w = z * d.conj();  // z/d = w/n
    return w.re % n == 0 && w.im % n == 0;
}

std::string to_string(SplittingClass c) {
    switch (c) {
        case SplittingClass::Ramified: return "ramified";
        case SplittingClass::Inert: return "inert";
        case SplittingClass::Split: return "split";
    }
    return "?";
}

namespace {

bool is_rational_prime(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Smallest-norm proper divisor, for the NotPrime witness.
std::optional<GaussianInt> find_factor(const GaussianInt& z) {
    Int n = norm(z);
    for (Int nd = 2; nd * nd <= n; ++nd) {
        if (n % nd != 0) continue;
        // candidates of norm nd, largest real part first
        Int a0 = 0;
        while ((a0 + 1) * (a0 + 1) <= nd) ++a0;
        for (Int a = a0; a >= 0; --a) {
            Int b2 = nd - a * a;
            Int b = 0;
            while (b * b < b2) ++b;
            if (b * b != b2) continue;
            for (const GaussianInt& w : {GaussianInt{a, b}, GaussianInt{a, -b}, GaussianInt{b, a}, GaussianInt{-b, a}}) {
                if (norm(w) == nd && divides(w, z)) return w;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

GaussianPrime classify_prime(const GaussianInt& z) {
    Int n = norm(z);
    if (n == 0) throw DomainError("NotPrime", "0 is not prime in Z[i]");
    if (n == 1) throw DomainError("NotPrime", to_string(z) + " is a unit in Z[i]");
    if (n == 2) return {z, SplittingClass::Ramified};
    if (is_rational_prime(n)) {
        // a^2 + b^2 = p forces p = 2 or p = 1 mod 4; 2 was handled above
        return {z, SplittingClass::Split};
    }
    // inert case: associate of a rational prime q = 3 mod 4
    if (z.re == 0 || z.im == 0) {
        Int q = z.re == 0 ? abs(z.im) : abs(z.re);
        if (q % 4 == 3 && is_rational_prime(q)) return {z, SplittingClass::Inert};
    }
    auto w = find_factor(z);
    std::string msg = to_string(z) + " is not prime in Z[i]";
    if (w) {
        GaussianInt q = z * w->conj();
        Int nw = norm(*w);
        GaussianInt cof{q.re / nw, q.im / nw};
        msg += "; witness (" + to_string(*w) + ")(" + to_string(cof) + ")";
    }
    throw DomainError("NotPrime", msg);
}

namespace {

// Nearest integers to num/den (den > 0): one value, or two on a tie.
void round_options(const Int& num, const Int& den, std::vector<Int>& out) {
    out.clear();
    Int q = num / den;
    Int r = num - q * den;
    if (r < 0) { q -= 1; r += den; }  // floor
    Int twice = 2 * r;
    if (twice < den) out.push_back(q);
    else if (twice > den) out.push_back(q + 1);
    else { out.push_back(q); out.push_back(q + 1); }
}

}  // namespace

GaussianInt reduce(const GaussianInt& z, const GaussianPrime& p) {
    Int n = norm(p.value);
    GaussianInt w = z * p.value.conj();  // z/p = w/n
    std::vector<Int> qre, qim;
    round_options(w.re, n, qre);
    round_options(w.im, n, qim);
    std::optional<GaussianInt> best;
    for (const Int& a : qre) {
        for (const Int& b : qim) {
            GaussianInt rem = z - GaussianInt{a, b} * p.value;
            if (!best) { best = rem; continue; }
            Int nr = norm(rem), nb = norm(*best);
            if (nr != nb ? nr < nb
                         : (rem.re != best->re ? rem.re > best->re : rem.im > best->im))
                best = rem;
        }
    }
    return *best;
}

std::vector<GaussianInt> residues(const GaussianPrime& p) {
    Int n = norm(p.value);
    std::vector<GaussianInt> out;
    // every class is hit inside the box |re|, |im| <= norm
    for (Int a = -n; a <= n; ++a) {
        for (Int b = -n; b <= n; ++b) {
            GaussianInt r = reduce({a, b}, p);
            if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
        }
    }
    std::sort(out.begin(), out.end(), [](const GaussianInt& x, const GaussianInt& y) {
        Int nx = norm(x), ny = norm(y);
        if (nx != ny) return nx < ny;
        return x < y;
    });
    check_internal(Int(out.size()) == n, "residue system has wrong size");
    return out;
}

std::string to_string(const GaussianInt& z) {
    if (z.im == 0) return z.re.str();
    std::string im_part = (z.im == 1 ? "" : z.im == -1 ? "-" : z.im.str()) + "i";
    if (z.re == 0) return im_part;
    return z.re.str() + (z.im > 0 ? "+" : "") + im_part;
}

GaussianInt parse_gaussian(std::string_view s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw DomainError("ParseError", "empty Gaussian integer");

    auto fail = [&](std::size_t pos) -> GaussianInt {
        throw DomainError("ParseError",
                          "bad Gaussian integer '" + std::string(s) + "' at position " + std::to_string(pos));
    };

    // split into one or two signed terms
    std::vector<std::pair<std::string, bool>> terms;  // (digits-or-empty, has_i)
    std::size_t i = 0;
    while (i < t.size()) {
        std::string term;
        if (t[i] == '+' || t[i] == '-') term.push_back(t[i++]);
        bool has_i = false;
        std::size_t digits = 0;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
            term.push_back(t[i++]);
            ++digits;
        }
        if (i < t.size() && t[i] == 'i') { has_i = true; ++i; }
        if (digits == 0 && !has_i) return fail(i);
        terms.emplace_back(term, has_i);
        if (terms.size() > 2) return fail(i);
    }
    GaussianInt out{0, 0};
    bool saw_re = false, saw_im = false;
    for (auto& [digits, has_i] : terms) {
        std::string d = digits;
        if (!d.empty() && d[0] == '+') d.erase(0, 1);
        if (d.empty() || d == "-") d += "1";
        Int v(d);
        if (has_i) {
            if (saw_im) return fail(t.size());
            out.im = v;
            saw_im = true;
        } else {
            if (saw_re) return fail(t.size());
            out.re = v;
            saw_re = true;
        }
    }
    return out;
}

std::size_t hash_value(const GaussianInt& z) {
    std::size_t h = std::hash<std::string>{}(z.re.str());
    h ^= std::hash<std::string>{}(z.im.str()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace bianchi
