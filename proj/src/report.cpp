#include "bianchi/report.hpp"

namespace bianchi {

namespace {

long long small(const Int& x) {
    check_internal(x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max(),
                   "value too large for JSON");
    return static_cast<long long>(x);
}

}  // namespace

json to_json(const GaussianInt& z) {
    return json{{"re", small(z.re)}, {"im", small(z.im)}};
}

json to_json(const FgAbGroup& g) {
    json torsion = json::array();
    for (const Int& d : g.torsion) torsion.push_back(small(d));
    return json{{"free_rank", g.free_rank}, {"torsion", torsion}};
}

json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(small(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const ProjectiveMatrix& m) {
    return json::array({json::array({to_json(m.a), to_json(m.b)}), json::array({to_json(m.c), to_json(m.d)})});
}

json to_json(const CharacterTable& t) {
    json out;
    out["type"] = to_string(t.iso_type);
    out["classes"] = json::array();
    for (std::size_t i = 0; i < t.n_classes(); ++i) {
        json cl;
        cl["label"] = t.class_labels[i];
        cl["size"] = small(t.class_sizes[i]);
        if (t.group.has_value()) cl["representative"] = to_json(t.classes[i].front());
        out["classes"].push_back(std::move(cl));
    }
    out["characters"] = json::array();
    for (const auto& row : t.chars) {
        json r = json::array();
        for (const Cyc12& v : row) {
            json coords = json::array();
            for (const Int& c : v.c) coords.push_back(small(c));
            r.push_back(std::move(coords));
        }
        out["characters"].push_back(std::move(r));
    }
    return out;
}

json to_json(const GCWModel& model) {
    json out;
    out["group"] = model.tag == GroupTag::Gamma1 ? "gamma1" : "congruence";
    if (model.prime) out["prime"] = to_string(model.prime->value);
    out["cells"] = json::array();
    for (int dim = 0; dim < 3; ++dim) {
        for (const auto& c : model.cells[dim]) {
            json cell;
            cell["dim"] = dim;
            cell["label"] = c.label;
            cell["stabilizer_type"] = to_string(c.stabilizer.iso_type);
            cell["stabilizer"] = json::array();
            for (const auto& m : c.stabilizer.elements) cell["stabilizer"].push_back(to_json(m));
            cell["translate"] = to_json(c.translate);
            cell["boundary"] = json::array();
            for (const auto& b : c.boundary)
                cell["boundary"].push_back(json{{"sign", b.sign}, {"target", b.target}, {"carrier", to_json(b.carrier)}});
            out["cells"].push_back(std::move(cell));
        }
    }
    return out;
}

json groups_report(const GCWModel& model) {
    json out;
    auto h = bredon_homology(model);
    auto c = bredon_cohomology(model);
    out["homology"] = json::array({to_json(h[0]), to_json(h[1]), to_json(h[2])});
    out["cohomology"] = json::array({to_json(c[0]), to_json(c[1]), to_json(c[2])});
    auto [k0, k1] = k_groups(model);
    out["k_groups"] = json{{"K0", to_json(k0)}, {"K1", to_json(k1)}};
    return out;
}

json hecke_report(const GaussianPrime& p) {
    json out = groups_report(gamma1_model());
    HeckeData h = hecke_operator(p);
    json cp = json::array();
    for (const Int& c : char_poly(h.on_H0)) cp.push_back(small(c));
    out["hecke"] = json{{"prime", to_string(p.value)},
                        {"on_H0", to_json(h.on_H0)},
                        {"on_H1", to_json(h.on_H1)},
                        {"on_K0", to_json(h.on_K0)},
                        {"on_K1", to_json(h.on_K1)},
                        {"char_poly_H0", cp}};
    return out;
}

}  // namespace bianchi
