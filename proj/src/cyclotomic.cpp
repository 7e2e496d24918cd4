#include "bianchi/cyclotomic.hpp"

namespace bianchi {

Cyc12 operator+(const Cyc12& x, const Cyc12& y) {
    Cyc12 out;
    for (int i = 0; i < 4; ++i) out.c[i] = x.c[i] + y.c[i];
    return out;
}

Cyc12 operator-(const Cyc12& x, const Cyc12& y) {
    Cyc12 out;
    for (int i = 0; i < 4; ++i) out.c[i] = x.c[i] - y.c[i];
    return out;
}

Cyc12 Cyc12::operator-() const {
    Cyc12 out;
    for (int i = 0; i < 4; ++i) out.c[i] = -c[i];
    return out;
}

Cyc12 operator*(const Cyc12& x, const Cyc12& y) {
    std::array<Int, 7> raw{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) raw[i + j] += x.c[i] * y.c[j];
    // z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1
    Cyc12 out;
    for (int i = 0; i < 4; ++i) out.c[i] = raw[i];
    out.c[2] += raw[4];
    out.c[0] -= raw[4];
    out.c[3] += raw[5];
    out.c[1] -= raw[5];
    out.c[0] -= raw[6];
    return out;
}

Cyc12 Cyc12::zeta_pow(int e) {
    e %= 12;
    if (e < 0) e += 12;
    Cyc12 out(Int(1));
    Cyc12 z;
    z.c[1] = 1;
    for (int k = 0; k < e; ++k) out = out * z;
    return out;
}

Cyc12 Cyc12::zeta(int n, int k) {
    check_internal(n > 0 && 12 % n == 0, "zeta order must divide 12");
    return zeta_pow((12 / n) * k);
}

Cyc12 Cyc12::conj() const {
    Cyc12 out(c[0]);
    for (int i = 1; i < 4; ++i) {
        Cyc12 term = zeta_pow(-i);
        for (auto& v : term.c) v *= c[i];
        out = out + term;
    }
    return out;
}

std::string Cyc12::str() const {
    std::string s = "[";
    for (int i = 0; i < 4; ++i) s += c[i].str() + (i < 3 ? "," : "]");
    return s;
}

}  // namespace bianchi
