#include "conlat/catalog.hpp"

#include <sstream>

#include "conlat/errors.hpp"
#include "catalog_data.inc"

namespace conlat {

bool catalog_is_parametric(CatalogId id) {
    switch (id) {
        case CatalogId::M:
        case CatalogId::K:
        case CatalogId::S:
        case CatalogId::SStar:
            return true;
        default:
            return false;
    }
}

std::string catalog_display_name(CatalogId id, int param) {
    switch (id) {
        case CatalogId::N5: return "N5";
        case CatalogId::D1: return "D1";
        case CatalogId::D2: return "D2";
        case CatalogId::L14: return "L14";
        case CatalogId::D13: return "D13";
        case CatalogId::M: return "M_" + std::to_string(param);
        case CatalogId::K: return "K_" + std::to_string(param);
        case CatalogId::S: return "S_" + std::to_string(param);
        case CatalogId::SStar: return "S*_" + std::to_string(param);
    }
    return "?";
}

FiniteLattice parse_cover_list(const std::string& text, const std::string& what) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream probe(line);
            std::string tok;
            if (probe >> tok) {
                out = line;
                return true;
            }
        }
        return false;
    };

    std::string header;
    if (!next_line(header)) throw InputError(what + ": missing node count");
    int count = 0;
    try {
        count = std::stoi(header);
    } catch (...) {
        throw InputError(what + " line " + std::to_string(lineno) + ": bad node count");
    }
    if (count <= 0) throw InputError(what + ": node count must be positive");

    std::string label_line;
    if (!next_line(label_line)) throw InputError(what + ": missing label list");
    std::vector<std::string> labels;
    {
        std::istringstream ls(label_line);
        std::string tok;
        while (ls >> tok) labels.push_back(tok);
    }
    if (static_cast<int>(labels.size()) != count)
        throw InputError(what + ": expected " + std::to_string(count) + " labels, got " +
                         std::to_string(labels.size()));
    std::map<std::string, int> index;
    for (int i = 0; i < count; ++i)
        if (!index.emplace(labels[i], i).second)
            throw InputError(what + ": duplicate label " + labels[i]);

    std::vector<std::pair<int, int>> covers;
    std::string cover_line;
    while (next_line(cover_line)) {
        std::istringstream cs(cover_line);
        std::string lo, rel, hi;
        if (!(cs >> lo >> rel >> hi) || rel != "<")
            throw InputError(what + " line " + std::to_string(lineno) +
                             ": expected `lower < upper`");
        auto li = index.find(lo), hi_it = index.find(hi);
        if (li == index.end())
            throw InputError(what + " line " + std::to_string(lineno) + ": unknown label " + lo);
        if (hi_it == index.end())
            throw InputError(what + " line " + std::to_string(lineno) + ": unknown label " + hi);
        covers.emplace_back(li->second, hi_it->second);
    }
    return FiniteLattice::from_covers(std::move(labels), covers);
}

const std::map<std::string, std::string>& figure_transcriptions() {
    static const std::map<std::string, std::string> files = [] {
        std::map<std::string, std::string> out;
        for (const auto& f : detail::kEmbeddedCoverFiles) out.emplace(f.name, f.text);
        return out;
    }();
    return files;
}

FiniteLattice figure_lattice(const std::string& stem) {
    const auto& files = figure_transcriptions();
    auto it = files.find(stem);
    if (it == files.end()) throw InputError("no bundled figure transcription named " + stem);
    return parse_cover_list(it->second, stem + ".covers");
}

namespace {

struct CoverBuilder {
    std::vector<std::string> labels;
    std::map<std::string, int> index;
    std::vector<std::pair<int, int>> covers;

    int node(const std::string& l) {
        auto [it, fresh] = index.emplace(l, static_cast<int>(labels.size()));
        if (fresh) labels.push_back(l);
        return it->second;
    }
    void cover(const std::string& lo, const std::string& hi) {
        covers.emplace_back(node(lo), node(hi));
    }
    FiniteLattice build() { return FiniteLattice::from_covers(std::move(labels), covers); }
};

std::string gam(int j, int side) {
    return "gamma" + std::to_string(j) + "_" + std::to_string(side);
}
std::string del(int j, int side) {
    return "delta" + std::to_string(j) + "_" + std::to_string(side);
}
std::string lmeet(const std::string& a, const std::string& b) { return a + "^" + b; }

// M_k / K_k: chain tiers j = 0..i with i = k-1; K has the extra alpha-flanker
// tier at level i, M closes gamma^i_0 ^ gamma^i_1 directly under alpha0^alpha1.
FiniteLattice build_mk(int k, bool with_alpha_tier) {
    const int i = k - 1;
    CoverBuilder b;
    b.cover("0", "eta0");
    b.cover("0", "eta1");
    b.cover("0", lmeet(gam(0, 0), gam(0, 1)));
    b.cover("eta0", gam(0, 0));
    b.cover("eta0", "beta0");
    b.cover("eta1", gam(0, 1));
    b.cover("eta1", "beta0");
    for (int j = 0; j < i; ++j) {
        const auto mj = lmeet(gam(j, 0), gam(j, 1));
        const auto lj = lmeet(gam(j, 0), gam(j + 1, 1));
        const auto rj = lmeet(gam(j + 1, 0), gam(j, 1));
        const auto th = "theta" + std::to_string(j);
        b.cover(mj, lj);
        b.cover(mj, rj);
        b.cover(lj, gam(j, 0));
        b.cover(lj, th);
        b.cover(rj, gam(j, 1));
        b.cover(rj, th);
        b.cover(th, lmeet(gam(j + 1, 0), gam(j + 1, 1)));
        b.cover(gam(j, 0), gam(j + 1, 0));
        b.cover(gam(j, 1), gam(j + 1, 1));
    }
    const auto mi = lmeet(gam(i, 0), gam(i, 1));
    if (with_alpha_tier) {
        const auto li = lmeet(gam(i, 0), "alpha1");
        const auto ri = lmeet("alpha0", gam(i, 1));
        const auto th = "theta" + std::to_string(i);
        b.cover(mi, li);
        b.cover(mi, ri);
        b.cover(li, gam(i, 0));
        b.cover(li, th);
        b.cover(ri, gam(i, 1));
        b.cover(ri, th);
        b.cover(th, "alpha0^alpha1");
    } else {
        b.cover(mi, gam(i, 0));
        b.cover(mi, gam(i, 1));
        b.cover(mi, "alpha0^alpha1");
    }
    b.cover(gam(i, 0), "alpha0");
    b.cover(gam(i, 1), "alpha1");
    b.cover("alpha0^alpha1", "alpha0");
    b.cover("alpha0^alpha1", "alpha1");
    b.cover("alpha0", "1");
    b.cover("alpha1", "1");
    b.cover("beta0", "1");
    return b.build();
}

// S_k / S*_k over a doubled D2: delta-chain tiers j = 0..i, gamma lifts on
// top of the chains. S keeps beta0 over the chain tops and the gamma lifts
// under 1; in S* the chain reaches gamma, the tier-i flankers meet the gamma
// lifts and beta0 = delta0_0 v delta0_1 closes over them.
FiniteLattice build_s(int k, bool star) {
    const int i = k - 1;
    CoverBuilder b;
    b.cover("0", "eta0");
    b.cover("0", "eta1");
    b.cover("0", lmeet(del(0, 0), del(0, 1)));
    b.cover("eta0", del(0, 0));
    b.cover("eta0", "mu0");
    b.cover("eta1", del(0, 1));
    b.cover("eta1", "mu0");
    for (int j = 0; j < i; ++j) {
        const auto mj = lmeet(del(j, 0), del(j, 1));
        const auto lj = lmeet(del(j, 0), del(j + 1, 1));
        const auto rj = lmeet(del(j + 1, 0), del(j, 1));
        const auto th = "theta" + std::to_string(j);
        b.cover(mj, lj);
        b.cover(mj, rj);
        b.cover(lj, del(j, 0));
        b.cover(lj, th);
        b.cover(rj, del(j, 1));
        b.cover(rj, th);
        b.cover(th, lmeet(del(j + 1, 0), del(j + 1, 1)));
        b.cover(del(j, 0), del(j + 1, 0));
        b.cover(del(j, 1), del(j + 1, 1));
    }
    const auto mi = lmeet(del(i, 0), del(i, 1));
    const auto gg = "gamma_0^gamma_1";
    if (star) {
        const auto li = lmeet(del(i, 0), "gamma_1");
        const auto ri = lmeet("gamma_0", del(i, 1));
        const auto th = "theta" + std::to_string(i);
        b.cover(mi, li);
        b.cover(mi, ri);
        b.cover(li, del(i, 0));
        b.cover(li, th);
        b.cover(ri, del(i, 1));
        b.cover(ri, th);
        b.cover(th, gg);
        b.cover(del(i, 0), "gamma_0");
        b.cover(del(i, 1), "gamma_1");
        b.cover("gamma_0", "beta0");
        b.cover("gamma_1", "beta0");
    } else {
        b.cover(mi, del(i, 0));
        b.cover(mi, del(i, 1));
        b.cover(mi, gg);
        b.cover(del(i, 0), "gamma_0");
        b.cover(del(i, 1), "gamma_1");
        b.cover(del(i, 0), "beta0");
        b.cover(del(i, 1), "beta0");
        b.cover("gamma_0", "1");
        b.cover("gamma_1", "1");
    }
    b.cover(gg, "gamma_0");
    b.cover(gg, "gamma_1");
    b.cover("mu0", "alpha0");
    b.cover("mu0", "beta0");
    b.cover("beta0", "1");
    b.cover("alpha0", "1");
    return b.build();
}

}  // namespace

CatalogEntry build_entry(CatalogId id, int param) {
    const bool parametric = catalog_is_parametric(id);
    if (parametric && param < 1)
        throw InputError(catalog_display_name(id, param) + ": parametric entry needs index >= 1");
    if (!parametric && param != 0)
        throw InputError(catalog_display_name(id) + " takes no index");
    CatalogEntry e;
    e.id = id;
    e.param = param;
    e.name = catalog_display_name(id, param);
    switch (id) {
        case CatalogId::N5: e.lattice = figure_lattice("n5"); break;
        case CatalogId::D1: e.lattice = figure_lattice("d1"); break;
        case CatalogId::D2: e.lattice = figure_lattice("d2"); break;
        case CatalogId::L14: e.lattice = figure_lattice("l14"); break;
        case CatalogId::D13: e.lattice = figure_lattice("d13"); break;
        case CatalogId::M: e.lattice = build_mk(param, /*with_alpha_tier=*/false); break;
        case CatalogId::K: e.lattice = build_mk(param, /*with_alpha_tier=*/true); break;
        case CatalogId::S: e.lattice = build_s(param, /*star=*/false); break;
        case CatalogId::SStar: e.lattice = build_s(param, /*star=*/true); break;
    }
    return e;
}

std::vector<CatalogEntry> list_entries(int max_param) {
    if (max_param < 1) throw InputError("max_param must be >= 1");
    std::vector<CatalogEntry> out;
    for (CatalogId id : {CatalogId::N5, CatalogId::D1, CatalogId::D2, CatalogId::L14,
                         CatalogId::D13})
        out.push_back(build_entry(id));
    for (int k = 1; k <= max_param; ++k)
        for (CatalogId id : {CatalogId::M, CatalogId::K, CatalogId::S, CatalogId::SStar})
            out.push_back(build_entry(id, k));
    return out;
}

std::optional<std::pair<CatalogEntry, LatticeEmbedding>> identify_in_catalog(
    const FiniteLattice& l, int max_param) {
    for (auto& entry : list_entries(max_param)) {
        if (entry.lattice.size() != l.size()) continue;
        if (auto m = find_isomorphism(entry.lattice, l))
            return std::make_pair(std::move(entry), std::move(*m));
    }
    return std::nullopt;
}

}  // namespace conlat
