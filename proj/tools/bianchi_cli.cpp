#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "bianchi/report.hpp"
#include "bianchi/selfcheck.hpp"

namespace {

using namespace bianchi;

GaussianPrime prime_arg(const std::string& s) { return classify_prime(parse_gaussian(s)); }

GCWModel model_arg(const std::string& which, const std::string& prime) {
    if (which == "gamma1") return gamma1_model();
    if (which == "congruence") {
        if (prime.empty()) throw DomainError("ParseError", "congruence model needs --prime");
        GaussianPrime p = prime_arg(prime);
        return split_orbits(gamma1_model(), p, coset_transversal(p));
    }
    throw DomainError("ParseError", "unknown group '" + which + "' (use gamma1 or congruence)");
}

std::string groups_line(const std::array<FgAbGroup, 3>& g, const std::string& sym) {
    std::string out;
    for (int i = 0; i < 3; ++i) {
        if (i) out += ", ";
        out += sym + "_" + std::to_string(i) + " = " + g[i].str();
    }
    return out;
}

void print_groups(const GCWModel& model, Variance variance, const std::string& format) {
    if (format == "json") {
        std::cout << groups_report(model).dump(2) << "\n";
        return;
    }
    if (variance == Variance::Homology) {
        std::cout << groups_line(bredon_homology(model), "H") << "\n";
    } else {
        auto g = bredon_cohomology(model);
        std::cout << "H^0 = " << g[0].str() << ", H^1 = " << g[1].str() << ", H^2 = " << g[2].str() << "\n";
    }
}

void print_model(const GCWModel& model, const std::string& format) {
    if (format == "json") {
        std::cout << to_json(model).dump(2) << "\n";
        return;
    }
    ModelSummary s = model_summary(model);
    for (int dim = 0; dim < 3; ++dim) {
        std::cout << "dim " << dim << ": " << s.cell_counts[dim] << " orbit cell"
                  << (s.cell_counts[dim] == 1 ? "" : "s") << ", chain rank " << s.chain_ranks[dim] << "\n";
        for (const auto& c : model.cells[dim])
            std::cout << "  " << c.label << "  stabilizer " << to_string(c.stabilizer.iso_type) << "\n";
    }
}

std::string cyc_str(const Cyc12& v) {
    if (v.is_rational_integer()) return v.c[0].str();
    if (v == Cyc12::omega()) return "w";
    if (v == Cyc12::omega() * Cyc12::omega()) return "w^2";
    if (v == Cyc12::imaginary_unit()) return "i";
    if (v == -Cyc12::imaginary_unit()) return "-i";
    return v.str();
}

void print_table(const std::string& what, const std::string& format) {
    CharacterTable t;
    if (what.find_first_of("abcd") != std::string::npos && what.find_first_not_of("abcd^*0123456789,") == std::string::npos) {
        // generator words, comma-separated, e.g. "a*c,c*a"
        std::vector<ProjectiveMatrix> gens;
        std::string cur;
        for (char ch : what + ",") {
            if (ch == ',') {
                if (!cur.empty()) gens.push_back(evaluate_word(cur));
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        t = character_table(generate_subgroup(gens));
    } else {
        t = character_table(parse_iso_type(what));
    }
    if (format == "json") {
        std::cout << to_json(t).dump(2) << "\n";
        return;
    }
    std::cout << to_string(t.iso_type) << " (" << t.n_irreducibles() << " irreducibles)\n";
    std::cout << "classes:";
    for (std::size_t i = 0; i < t.n_classes(); ++i)
        std::cout << " " << t.class_labels[i] << "(x" << t.class_sizes[i] << ")";
    std::cout << "\n";
    for (const auto& row : t.chars) {
        std::cout << " ";
        for (const Cyc12& v : row) std::cout << " " << cyc_str(v);
        std::cout << "\n";
    }
}

void print_hecke(const GaussianPrime& p, int degree, const std::string& format) {
    if (format == "json") {
        std::cout << hecke_report(p).dump(2) << "\n";
        return;
    }
    HeckeData h = hecke_operator(p);
    auto show = [&](const std::string& name, const IntMatrix& m) {
        std::cout << name << " (" << m.rows() << "x" << m.cols() << "):\n";
        if (m.rows() && m.cols()) std::cout << m.str();
    };
    if (degree < 0 || degree == 0) show("T on H_0", h.on_H0);
    if (degree < 0 || degree == 1) show("T on H_1", h.on_H1);
    if (degree < 0 || degree == 2) show("T on H_2", h.on_H2);
    if (degree < 0) {
        show("T on K_0", h.on_K0);
        show("T on K_1", h.on_K1);
        std::cout << "char_poly(T on H_0) =";
        for (const Int& c : char_poly(h.on_H0)) std::cout << " " << c.str();
        std::cout << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Bredon homology and Hecke operators for PSL2(Z[i])"};
    app.require_subcommand(1);
    std::string prime, format = "text", group = "gamma1", table_what;
    int degree = -1;
    std::uint64_t seed = 20240901;

    auto add_common = [&](CLI::App* cmd, bool with_group) {
        cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
        if (with_group) {
            cmd->add_option("group", group)->check(CLI::IsMember({"gamma1", "congruence"}));
            cmd->add_option("--prime", prime);
        }
    };
    add_common(app.add_subcommand("homology", "Bredon homology of a model"), true);
    add_common(app.add_subcommand("cohomology", "Bredon cohomology of a model"), true);
    add_common(app.add_subcommand("model", "orbit cells and stabilizers"), true);
    CLI::App* hecke = app.add_subcommand("hecke", "Hecke operator at a prime level");
    hecke->add_option("--prime", prime)->required();
    hecke->add_option("--degree", degree)->check(CLI::Range(0, 2));
    hecke->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    CLI::App* table = app.add_subcommand("table", "character table of a stabilizer type");
    table->add_option("type", table_what)->required();
    table->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    CLI::App* verify = app.add_subcommand("verify", "run the full property suite");
    verify->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);

    if (app.got_subcommand("homology")) print_groups(model_arg(group, prime), Variance::Homology, format);
    if (app.got_subcommand("cohomology")) print_groups(model_arg(group, prime), Variance::Cohomology, format);
    if (app.got_subcommand("model")) print_model(model_arg(group, prime), format);
    if (app.got_subcommand("hecke")) print_hecke(prime_arg(prime), degree, format);
    if (app.got_subcommand("table")) print_table(table_what, format);
    if (app.got_subcommand("verify")) {
        bool all_ok = true;
        for (const CheckResult& r : run_verification(seed)) {
            std::cout << (r.passed ? "ok   " : "FAIL ") << r.name;
            if (!r.passed && !r.detail.empty()) std::cout << " (" << r.detail << ")";
            std::cout << "\n";
            all_ok = all_ok && r.passed;
        }
        if (!all_ok) return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const bianchi::DomainError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
