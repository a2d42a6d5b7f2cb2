// conlat — a workbench for congruence lattices of finite algebras: doubling
// constructions, ascending congruence chains, and classification of the
// generated sublattices against the bundled catalog.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "conlat/catalog.hpp"
#include "conlat/classify.hpp"
#include "conlat/errors.hpp"
#include "conlat/examples.hpp"
#include "conlat/io.hpp"

namespace {

using namespace conlat;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

struct CommonFlags {
    std::string dot_dir;
    int budget = 0;
    int threads = 1;
    bool relaxed = false;

    ClassifyOptions options() const {
        ClassifyOptions o;
        o.relaxed_bounds = relaxed;
        o.chain_budget = budget;
        return o;
    }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--dot", flags.dot_dir, "directory for Hasse-diagram DOT exports");
    cmd->add_option("--budget", flags.budget, "iteration budget for the congruence chain");
    cmd->add_option("--threads", flags.threads, "worker threads for searches")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--relaxed-bounds", flags.relaxed,
                  "validate figure patterns with a relative top instead of the global bounds");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct LoadedDocument {
    AlgebraDocument doc;
    std::string digest;
    std::string path;
};

LoadedDocument load_document(const std::string& path) {
    const std::string text = read_file(path);
    LoadedDocument out{parse_algebra(text), content_digest(text), path};
    return out;
}

Partition named(const LoadedDocument& d, const std::string& name) {
    if (auto p = d.doc.partition(name)) return *p;
    throw InputError("no partition named '" + name + "' in " + d.path);
}

void write_dot(const std::string& dir, const std::string& name, const FiniteLattice& l) {
    std::filesystem::create_directories(dir);
    const auto path = std::filesystem::path(dir) / (name + ".dot");
    std::ofstream out(path);
    out << l.to_dot(name);
    std::cout << "dot: wrote " << path.string() << "\n";
}

// generated-lattice element rendered with its catalog landmark when a witness
// is present, plus the partition blocks
void print_witness(const Classification& c) {
    if (!c.witness || !c.target) return;
    std::cout << "witness (catalog " << c.target->name << " -> generated congruence):\n";
    for (int i = 0; i < c.target->lattice.size(); ++i)
        std::cout << "  " << c.target->lattice.label(i) << " -> "
                  << c.generated.elements[c.witness->map[i]].to_block_list() << "\n";
}

void print_chain(const ChainResult& chain, const std::string& symbol) {
    std::cout << "chain:";
    for (std::size_t i = 0; i < chain.chain.size(); ++i) {
        if (i) std::cout << " <";
        std::cout << " " << symbol << "^" << i << " = " << chain.chain[i].to_block_list();
    }
    std::cout << "\n  stabilized at index " << chain.stabilized_at
              << (chain.reached_outer ? " (reached the interval top)"
                                      : " (strictly below the interval top)")
              << "\n";
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    ~Timer() {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::cerr << "elapsed: " << ms << " ms\n";
    }
};

int cmd_classify_n5(const std::string& file, const N5Labels& labels_by_name,
                    const std::vector<std::string>& names, const CommonFlags& flags) {
    Timer timer;
    LoadedDocument d = load_document(file);
    std::cout << "conlat classify-n5\ninput: " << file << " (digest " << d.digest << ")\n";
    std::cout << "labels: gamma=" << names[0] << " alpha=" << names[1] << " beta=" << names[2]
              << (flags.relaxed ? " (relaxed bounds)" : "") << "\n";
    N5Labels labels = labels_by_name;
    Classification c = classify_n5(d.doc.algebra(), labels, flags.options());
    print_chain(c.chain, "gamma");
    std::cout << "family: " << family_name(c.family) << " index " << c.index << " (catalog "
              << c.target->name << ")\n";
    std::cout << "generated sublattice: " << c.generated.lattice.size() << " elements\n";
    print_witness(c);
    if (!flags.dot_dir.empty()) {
        write_dot(flags.dot_dir, "generated_n5", c.generated.lattice);
        write_dot(flags.dot_dir, "catalog_" + c.target->name, c.target->lattice);
    }
    return kExitOk;
}

int cmd_check_d1(const std::string& file, const D1Labels& labels, const CommonFlags& flags) {
    Timer timer;
    LoadedDocument d = load_document(file);
    std::cout << "conlat check-d1\ninput: " << file << " (digest " << d.digest << ")\n";
    D1Result r = generate_d1_square(d.doc.algebra(), labels, flags.options());
    std::cout << "generated sublattice: " << r.generated.lattice.size() << " elements\n";
    int named_present = 0;
    for (int idx : r.figure_elements)
        if (idx >= 0) ++named_present;
    std::cout << "figure elements present: " << named_present << " of 13\n";
    if (r.witness) {
        std::cout << "catalog D13: isomorphism verified\n";
    } else {
        std::cout << "catalog D13: NOT isomorphic (the closure also contains diagonal\n"
                     "congruences beyond the thirteen named elements; see NOTES.md)\n";
    }
    if (!flags.dot_dir.empty()) {
        write_dot(flags.dot_dir, "generated_d1", r.generated.lattice);
        write_dot(flags.dot_dir, "catalog_D13", r.target->lattice);
    }
    return r.witness ? kExitOk : kExitMismatch;
}

int cmd_classify_d2(const std::string& file, const D2Labels& labels, const CommonFlags& flags) {
    Timer timer;
    LoadedDocument d = load_document(file);
    std::cout << "conlat classify-d2\ninput: " << file << " (digest " << d.digest << ")\n";
    Classification c = classify_d2(d.doc.algebra(), labels, flags.options());
    print_chain(c.chain, "delta");
    if (c.degenerate) {
        std::cout << "degenerate: delta equals gamma; reported as index-0 stabilization\n";
        std::cout << "family: " << family_name(c.family) << " index 0\n";
        return kExitOk;
    }
    std::cout << "family: " << family_name(c.family) << " index " << c.index << " (catalog "
              << c.target->name << ")\n";
    std::cout << "generated sublattice: " << c.generated.lattice.size() << " elements\n";
    print_witness(c);
    if (!flags.dot_dir.empty()) {
        write_dot(flags.dot_dir, "generated_d2", c.generated.lattice);
        write_dot(flags.dot_dir, "catalog_" + c.target->name, c.target->lattice);
    }
    return kExitOk;
}

CatalogEntry parse_catalog_name(std::string name) {
    auto fail = [&] { throw InputError("unknown catalog entry '" + name + "'"); };
    for (auto id : {CatalogId::N5, CatalogId::D1, CatalogId::D2, CatalogId::L14, CatalogId::D13})
        if (name == catalog_display_name(id)) return build_entry(id);
    CatalogId id;
    std::size_t prefix = 0;
    if (name.rfind("M_", 0) == 0) {
        id = CatalogId::M;
        prefix = 2;
    } else if (name.rfind("K_", 0) == 0) {
        id = CatalogId::K;
        prefix = 2;
    } else if (name.rfind("S*_", 0) == 0) {
        id = CatalogId::SStar;
        prefix = 3;
    } else if (name.rfind("S_", 0) == 0) {
        id = CatalogId::S;
        prefix = 2;
    } else {
        fail();
    }
    int param = 0;
    try {
        param = std::stoi(name.substr(prefix));
    } catch (...) {
        fail();
    }
    return build_entry(id, param);
}

void audit_lattice(const std::string& title, const FiniteLattice& l) {
    std::cout << "lattice: " << title << " (" << l.size() << " elements)\n";
    if (auto violation = l.check_axioms())
        throw CrossCheckError("lattice axioms violated: " + *violation);
    std::cout << "  modular:               " << (l.is_modular() ? "yes" : "no") << "\n";
    std::cout << "  distributive:          " << (l.is_distributive() ? "yes" : "no") << "\n";
    std::cout << "  meet-semidistributive: " << (l.is_meet_semidistributive() ? "yes" : "no")
              << "\n";
    std::cout << "  join-semidistributive: " << (l.is_join_semidistributive() ? "yes" : "no")
              << "\n";
    std::cout << "  Whitman (W):           " << (l.satisfies_whitman() ? "yes" : "no") << "\n";
    std::cout << "  projective (finite):   " << (l.is_projective_finite() ? "yes" : "no") << "\n";
    for (auto id : {CatalogId::N5, CatalogId::D1, CatalogId::D2}) {
        const auto pattern = build_entry(id);
        auto emb = find_embedding(pattern.lattice, l);
        std::cout << "  contains " << pattern.name << ":           "
                  << (emb ? "yes (" : "no");
        if (emb) {
            for (std::size_t i = 0; i < emb->map.size(); ++i)
                std::cout << (i ? " " : "") << l.label(emb->map[i]);
            std::cout << ")";
        }
        std::cout << "\n";
    }
}

int cmd_lattice_audit(const std::string& target, const CommonFlags& flags) {
    Timer timer;
    std::cout << "conlat lattice-audit\n";
    if (target.rfind("catalog:", 0) == 0) {
        CatalogEntry entry = parse_catalog_name(target.substr(8));
        audit_lattice(entry.name, entry.lattice);
        if (!flags.dot_dir.empty()) write_dot(flags.dot_dir, entry.name, entry.lattice);
        return kExitOk;
    }
    LoadedDocument d = load_document(target);
    std::cout << "input: " << target << " (digest " << d.digest << ")\n";
    if (d.doc.partitions.empty())
        throw InputError(target + " names no partitions to generate a lattice from");
    std::vector<Partition> gens;
    std::vector<std::string> names;
    for (const auto& [name, p] : d.doc.partitions) {
        gens.push_back(p);
        names.push_back(name);
    }
    PartitionSublattice sub = lattice_from_partitions(gens, names);
    audit_lattice("closure of " + std::to_string(gens.size()) + " partitions from " + target,
                  sub.lattice);
    if (!flags.dot_dir.empty()) write_dot(flags.dot_dir, "audit", sub.lattice);
    return kExitOk;
}

int cmd_catalog(int max_param, const CommonFlags& flags) {
    Timer timer;
    std::cout << "conlat catalog (parametric families up to index " << max_param << ")\n";
    for (const auto& e : list_entries(max_param)) {
        std::cout << "  " << e.name << ": " << e.lattice.size() << " elements, "
                  << (e.lattice.is_modular() ? "modular" : "nonmodular") << ", "
                  << (e.lattice.is_semidistributive() ? "SD" : "not SD") << ", "
                  << (e.lattice.satisfies_whitman() ? "(W)" : "not (W)") << "\n";
        if (!flags.dot_dir.empty()) write_dot(flags.dot_dir, e.name, e.lattice);
    }
    return kExitOk;
}

int cmd_examples(bool with_lemmas, const CommonFlags& flags) {
    Timer timer;
    std::cout << "conlat examples\n";
    bool all_match = true;
    ClassifyOptions opts = flags.options();
    opts.relaxed_bounds = true;  // the bundled pentagons use relative tops
    for (const auto& ex : worked_examples()) {
        AlgebraDocument doc = parse_algebra(ex.document);
        N5Labels labels{*doc.partition(ex.gamma), *doc.partition(ex.alpha),
                        *doc.partition(ex.beta), {}, {}};
        Classification c = classify_n5(doc.algebra(), labels, opts);
        const bool match = c.family == ex.expected_family && c.index == ex.expected_index;
        all_match = all_match && match;
        std::cout << "  " << ex.name << ": expected " << family_name(ex.expected_family) << "_"
                  << ex.expected_index << ", computed " << family_name(c.family) << "_"
                  << c.index << " (" << c.generated.lattice.size() << "-element sublattice) "
                  << (match ? "MATCH" : "MISMATCH") << "\n";
        if (!flags.dot_dir.empty())
            write_dot(flags.dot_dir, "generated_" + ex.name, c.generated.lattice);
        if (with_lemmas) {
            for (const auto& check : verify_lemma_suite(doc.algebra(), labels, opts)) {
                const char* status = check.status == LemmaStatus::Passed    ? "pass"
                                     : check.status == LemmaStatus::Skipped ? "skip"
                                                                            : "FAIL";
                std::cout << "    [" << status << "] " << check.lemma;
                if (!check.detail.empty()) std::cout << " — " << check.detail;
                std::cout << "\n";
                if (check.status == LemmaStatus::Failed) all_match = false;
            }
        }
    }
    std::cout << (all_match ? "all examples match\n" : "MISMATCH detected\n");
    return all_match ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"congruence-lattice workbench: doubling constructions, congruence chains, "
                 "and sublattice classification"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string file, gamma_name, alpha_name, beta_name, zero_name, one_name;
    std::string d_alpha, d_beta, d_gamma, d_mu, d_delta;
    std::string audit_target;
    int max_param = 3;
    bool with_lemmas = false;

    auto* n5 = app.add_subcommand("classify-n5",
                                  "classify the sublattice generated by a doubled pentagon");
    n5->add_option("file", file, "algebra document")->required();
    n5->add_option("--gamma", gamma_name)->required();
    n5->add_option("--alpha", alpha_name)->required();
    n5->add_option("--beta", beta_name)->required();
    n5->add_option("--zero", zero_name, "optional pentagon bottom label");
    n5->add_option("--one", one_name, "optional pentagon top label");
    add_common(n5, flags);

    auto* d1 = app.add_subcommand("check-d1", "close the five lifts of a D1-labeled quintuple");
    d1->add_option("file", file)->required();
    d1->add_option("--alpha", d_alpha)->required();
    d1->add_option("--beta", d_beta)->required();
    d1->add_option("--gamma", d_gamma)->required();
    d1->add_option("--mu", d_mu)->required();
    d1->add_option("--delta", d_delta)->required();
    add_common(d1, flags);

    auto* d2 = app.add_subcommand("classify-d2",
                                  "classify the sublattice generated by a doubled D2");
    d2->add_option("file", file)->required();
    d2->add_option("--alpha", d_alpha)->required();
    d2->add_option("--beta", d_beta)->required();
    d2->add_option("--gamma", d_gamma)->required();
    d2->add_option("--delta", d_delta)->required();
    d2->add_option("--mu", d_mu)->required();
    add_common(d2, flags);

    auto* audit = app.add_subcommand("lattice-audit",
                                     "structural predicates for a file or catalog lattice");
    audit->add_option("target", audit_target, "algebra document or catalog:<NAME>")->required();
    add_common(audit, flags);

    auto* cat = app.add_subcommand("catalog", "list the bundled catalog lattices");
    cat->add_option("--max-param", max_param, "largest parametric index to list")
        ->check(CLI::PositiveNumber);
    add_common(cat, flags);

    auto* ex = app.add_subcommand("examples", "run the bundled worked examples end-to-end");
    ex->add_flag("--lemmas", with_lemmas, "append the lemma evaluation table");
    add_common(ex, flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (n5->parsed()) {
            LoadedDocument d = load_document(file);
            N5Labels labels{named(d, gamma_name), named(d, alpha_name), named(d, beta_name),
                            {}, {}};
            if (!zero_name.empty()) labels.zero = named(d, zero_name);
            if (!one_name.empty()) labels.one = named(d, one_name);
            return cmd_classify_n5(file, labels, {gamma_name, alpha_name, beta_name}, flags);
        }
        if (d1->parsed()) {
            LoadedDocument d = load_document(file);
            D1Labels labels{named(d, d_alpha), named(d, d_beta), named(d, d_gamma),
                            named(d, d_mu), named(d, d_delta)};
            return cmd_check_d1(file, labels, flags);
        }
        if (d2->parsed()) {
            LoadedDocument d = load_document(file);
            D2Labels labels{named(d, d_alpha), named(d, d_beta), named(d, d_gamma),
                            named(d, d_delta), named(d, d_mu)};
            return cmd_classify_d2(file, labels, flags);
        }
        if (audit->parsed()) return cmd_lattice_audit(audit_target, flags);
        if (cat->parsed()) return cmd_catalog(max_param, flags);
        if (ex->parsed()) return cmd_examples(with_lemmas, flags);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const CrossCheckError& e) {
        std::cerr << "cross-check failure: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
