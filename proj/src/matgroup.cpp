#include "bianchi/matgroup.hpp"

#include <cctype>

namespace bianchi {

namespace {

GaussianInt det(const GaussianInt& a, const GaussianInt& b, const GaussianInt& c, const GaussianInt& d) {
    return a * d - b * c;
}

bool sign_canonical(const GaussianInt& z) { return z.re > 0 || (z.re == 0 && z.im > 0); }

}  // namespace

ProjectiveMatrix ProjectiveMatrix::from_entries(GaussianInt a, GaussianInt b, GaussianInt c, GaussianInt d) {
    if (det(a, b, c, d) != GaussianInt{1, 0})
        throw DomainError("NotUnimodular", "matrix [[" + to_string(a) + "," + to_string(b) + "],[" +
                                              to_string(c) + "," + to_string(d) + "]] has det != 1");
    for (const GaussianInt* e : {&a, &b, &c, &d}) {
        if (e->is_zero()) continue;
        if (!sign_canonical(*e)) { a = -a; b = -b; c = -c; d = -d; }
        break;
    }
    return ProjectiveMatrix{a, b, c, d};
}

ProjectiveMatrix ProjectiveMatrix::identity() {
    return from_entries({1, 0}, {0, 0}, {0, 0}, {1, 0});
}

ProjectiveMatrix compose(const ProjectiveMatrix& x, const ProjectiveMatrix& y) {
    return ProjectiveMatrix::from_entries(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                                          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d);
}

ProjectiveMatrix inverse(const ProjectiveMatrix& x) {
    return ProjectiveMatrix::from_entries(x.d, -x.b, -x.c, x.a);
}

ProjectiveMatrix conjugate(const ProjectiveMatrix& x, const ProjectiveMatrix& y) {
    return compose(compose(x, y), inverse(x));
}

int element_order(const ProjectiveMatrix& x) {
    ProjectiveMatrix id = ProjectiveMatrix::identity();
    ProjectiveMatrix y = x;
    for (int k = 1; k <= 24; ++k) {
        if (y == id) return k;
        y = compose(y, x);
    }
    throw InternalError("element order exceeds 24; not in a finite stabilizer");
}

std::size_t hash_value(const ProjectiveMatrix& m) {
    std::size_t h = 0;
    for (const GaussianInt* e : {&m.a, &m.b, &m.c, &m.d})
        h ^= hash_value(*e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

const Generators& standard_generators() {
    static const Generators g = {
        ProjectiveMatrix::from_entries({0, 0}, {0, 1}, {0, 1}, {1, 0}),    // a
        ProjectiveMatrix::from_entries({0, 0}, {0, 1}, {0, 1}, {0, 0}),    // b
        ProjectiveMatrix::from_entries({1, 0}, {1, 0}, {-1, 0}, {0, 0}),   // c
        ProjectiveMatrix::from_entries({0, 0}, {-1, 0}, {1, 0}, {0, 0}),   // d
    };
    return g;
}

ProjectiveMatrix evaluate_word(std::string_view word) {
    const Generators& g = standard_generators();
    ProjectiveMatrix out = ProjectiveMatrix::identity();
    std::size_t i = 0;
    while (i < word.size()) {
        char ch = word[i];
        if (ch == '*' || std::isspace(static_cast<unsigned char>(ch))) { ++i; continue; }
        ProjectiveMatrix gen = ProjectiveMatrix::identity();
        switch (ch) {
            case 'a': gen = g.a; break;
            case 'b': gen = g.b; break;
            case 'c': gen = g.c; break;
            case 'd': gen = g.d; break;
            default:
                throw DomainError("ParseError", "bad generator word '" + std::string(word) +
                                                    "' at position " + std::to_string(i));
        }
        ++i;
        long long power = 1;
        if (i < word.size() && word[i] == '^') {
            ++i;
            std::size_t start = i;
            while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i]))) ++i;
            if (i == start)
                throw DomainError("ParseError", "bad exponent in word '" + std::string(word) +
                                                    "' at position " + std::to_string(start));
            power = std::stoll(std::string(word.substr(start, i - start)));
        }
        for (long long k = 0; k < power; ++k) out = compose(out, gen);
    }
    return out;
}

bool verify_relators(const std::vector<std::string>& relators) {
    ProjectiveMatrix id = ProjectiveMatrix::identity();
    for (const std::string& r : relators)
        if (evaluate_word(r) != id) return false;
    return true;
}

bool verify_presentation() {
    static const std::vector<std::string> relators = {"a^3", "b^2", "c^3",  "d^2",
                                                      "a*c*a*c", "a*d*a*d", "b*d*b*d", "b*c*b*c"};
    return verify_relators(relators);
}

bool in_congruence_subgroup(const ProjectiveMatrix& m, const GaussianPrime& p) {
    return divides(p.value, m.c);
}

CosetTransversal coset_transversal(const GaussianPrime& p) {
    CosetTransversal t{p, {}};
    for (const GaussianInt& z : residues(p))
        t.reps.push_back(ProjectiveMatrix::from_entries({1, 0}, {0, 0}, z, {1, 0}));
    t.reps.push_back(ProjectiveMatrix::from_entries({0, 0}, {-1, 0}, {1, 0}, {0, 0}));  // sigma
    for (std::size_t i = 0; i < t.reps.size(); ++i)
        for (std::size_t j = 0; j < t.reps.size(); ++j)
            if (i != j && in_congruence_subgroup(compose(t.reps[i], inverse(t.reps[j])), p))
                throw DomainError("TransversalInvalid",
                                  "representatives " + std::to_string(i) + " and " + std::to_string(j) +
                                      " share a coset at level " + to_string(p.value));
    return t;
}

std::size_t coset_reduce(const ProjectiveMatrix& m, const CosetTransversal& t) {
    for (std::size_t j = 0; j < t.reps.size(); ++j)
        if (in_congruence_subgroup(compose(m, inverse(t.reps[j])), t.prime)) return j;
    throw DomainError("NoCoset", "no transversal representative matches; transversal is broken");
}

Int psl2_order_fq(const Int& q) {
    if (q < 2) throw DomainError("NotPrimePower", q.str() + " is not a prime power");
    Int m = q;
    Int p = 0;
    for (Int d = 2; d * d <= m; ++d) {
        if (m % d == 0) { p = d; break; }
    }
    if (p == 0) p = m;
    while (m % p == 0) m /= p;
    if (m != 1) throw DomainError("NotPrimePower", q.str() + " is not a prime power");
    Int n = q * (q * q - 1);
    return q % 2 == 0 ? n : n / 2;
}

std::vector<GLMatrix> double_coset_left_reps(const GaussianPrime& p) {
    CosetTransversal t = coset_transversal(p);
    std::vector<GLMatrix> out;
    for (const ProjectiveMatrix& r : t.reps)
        out.push_back(GLMatrix{p.value * r.a, p.value * r.b, r.c, r.d});  // diag(p,1) * r
    // distinctness: alpha_i alpha_j^{-1} = g (r_i r_j^{-1}) g^{-1} is integral up to
    // scaling iff r_i r_j^{-1} lies in the congruence subgroup
    for (std::size_t i = 0; i < t.reps.size(); ++i)
        for (std::size_t j = 0; j < t.reps.size(); ++j)
            check_internal(i == j || !in_congruence_subgroup(compose(t.reps[i], inverse(t.reps[j])), p),
                           "double-coset representatives collide");
    return out;
}

std::vector<GLMatrix> double_coset_left_reps_identity() {
    return {GLMatrix{{1, 0}, {0, 0}, {0, 0}, {1, 0}}};
}

}  // namespace bianchi
