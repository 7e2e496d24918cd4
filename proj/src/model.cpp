#include "bianchi/model.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace bianchi {

int GCWModel::dimension() const {
    int d = -1;
    for (int i = 0; i < 3; ++i)
        if (!cells[i].empty()) d = i;
    return d;
}

const OrbitCell& GCWModel::cell(int dim, const std::string& label) const {
    for (const auto& c : cells[dim])
        if (c.label == label) return c;
    throw InternalError("no cell '" + label + "' in dimension " + std::to_string(dim));
}

const GCWModel& gamma1_model() {
    static const GCWModel model = [] {
        const Generators& g = standard_generators();
        ProjectiveMatrix id = ProjectiveMatrix::identity();
        GCWModel m;
        m.tag = GroupTag::Gamma1;

        auto vertex = [&](const std::string& label, std::vector<ProjectiveMatrix> gens) {
            OrbitCell c;
            c.dim = 0;
            c.label = label;
            c.stabilizer = generate_subgroup(gens);
            return c;
        };
        m.cells[0].push_back(vertex("P", {g.a, g.c}));
        m.cells[0].push_back(vertex("Q", {g.a, g.d}));
        m.cells[0].push_back(vertex("R", {g.b, g.d}));
        m.cells[0].push_back(vertex("S", {g.b, g.c}));

        auto edge = [&](const std::string& label, const ProjectiveMatrix& gen, const std::string& tail,
                        const std::string& head) {
            OrbitCell c;
            c.dim = 1;
            c.label = label;
            c.stabilizer = generate_subgroup({gen});
            c.boundary = {{-1, tail, id}, {+1, head, id}};
            return c;
        };
        m.cells[1].push_back(edge("PQ", g.a, "P", "Q"));
        m.cells[1].push_back(edge("QR", g.d, "Q", "R"));
        m.cells[1].push_back(edge("RS", g.b, "R", "S"));
        m.cells[1].push_back(edge("SP", g.c, "S", "P"));

        OrbitCell e;
        e.dim = 2;
        e.label = "E";
        e.stabilizer = identify({id});
        e.boundary = {{+1, "PQ", id}, {+1, "QR", id}, {+1, "RS", id}, {+1, "SP", id}};
        m.cells[2].push_back(e);
        return m;
    }();
    return model;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

GCWModel split_orbits(const GCWModel& model, const GaussianPrime& p, const CosetTransversal& t) {
    check_internal(model.tag == GroupTag::Gamma1, "orbit splitting starts from the base model");
    const std::size_t nrep = t.reps.size();
    std::vector<ProjectiveMatrix> rep_inv;
    rep_inv.reserve(nrep);
    for (const auto& r : t.reps) rep_inv.push_back(inverse(r));

    // per base cell: class representative (smallest index) for every index
    std::map<std::string, std::vector<std::size_t>> class_rep;
    for (int dim = 0; dim < 3; ++dim) {
        for (const auto& cell : model.cells[dim]) {
            UnionFind uf(nrep);
            for (std::size_t j = 0; j < nrep; ++j)
                for (std::size_t l = j + 1; l < nrep; ++l)
                    for (const auto& s : cell.stabilizer.elements)
                        if (in_congruence_subgroup(compose(compose(t.reps[j], s), rep_inv[l]), p)) {
                            uf.unite(j, l);
                            break;
                        }
            std::vector<std::size_t> reps_of(nrep);
            for (std::size_t j = 0; j < nrep; ++j) reps_of[j] = uf.find(j);
            class_rep[cell.label] = std::move(reps_of);
        }
    }

    GCWModel out;
    out.tag = GroupTag::Congruence;
    out.prime = p;
    for (int dim = 0; dim < 3; ++dim) {
        for (const auto& cell : model.cells[dim]) {
            const auto& reps_of = class_rep.at(cell.label);
            for (std::size_t jstar = 0; jstar < nrep; ++jstar) {
                if (reps_of[jstar] != jstar) continue;
                const ProjectiveMatrix& r = t.reps[jstar];
                OrbitCell c;
                c.dim = dim;
                c.label = cell.label + "#" + std::to_string(jstar);
                c.parent = cell.label;
                c.transversal_index = jstar;
                c.translate = r;

                std::vector<ProjectiveMatrix> stab;
                for (const auto& s : cell.stabilizer.elements) {
                    ProjectiveMatrix x = conjugate(r, s);
                    if (in_congruence_subgroup(x, p)) stab.push_back(x);
                }
                std::vector<ProjectiveMatrix> gens;
                for (const auto& s : cell.stabilizer.dist_gens) {
                    ProjectiveMatrix x = conjugate(r, s);
                    if (in_congruence_subgroup(x, p)) gens.push_back(x);
                }
                c.stabilizer = identify(stab, gens);

                for (const auto& b : cell.boundary) {
                    const OrbitCell& face = model.cell(dim - 1, b.target);
                    const auto& face_reps = class_rep.at(b.target);
                    bool done = false;
                    for (std::size_t l = 0; l < nrep && !done; ++l) {
                        if (face_reps[l] != l) continue;
                        for (const auto& s : face.stabilizer.elements) {
                            ProjectiveMatrix k = compose(compose(compose(r, b.carrier), s), rep_inv[l]);
                            if (in_congruence_subgroup(k, p)) {
                                c.boundary.push_back({b.sign, b.target + "#" + std::to_string(l), k});
                                done = true;
                                break;
                            }
                        }
                    }
                    check_internal(done, "face of a split cell matched no orbit class");
                }
                out.cells[dim].push_back(std::move(c));
            }
        }
    }
    return out;
}

ModelSummary model_summary(const GCWModel& model) {
    ModelSummary s;
    for (int dim = 0; dim < 3; ++dim) {
        s.cell_counts[dim] = model.cells[dim].size();
        for (const auto& c : model.cells[dim]) {
            s.stabilizer_types[dim].push_back(c.stabilizer.iso_type);
            s.chain_ranks[dim] += irreducible_count(c.stabilizer.iso_type);
        }
    }
    return s;
}

}  // namespace bianchi
