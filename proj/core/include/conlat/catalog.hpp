#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conlat/embedding.hpp"
#include "conlat/lattice.hpp"

namespace conlat {

enum class CatalogId { N5, D1, D2, L14, D13, M, K, S, SStar };

// M, K, S, SStar are parametric (param >= 1, indexing as in the figures:
// build_entry(K, 2) is the figure's K_2 and K_1 is the lattice called K).
bool catalog_is_parametric(CatalogId id);
std::string catalog_display_name(CatalogId id, int param = 0);

struct CatalogEntry {
    CatalogId id{};
    int param = 0;  // 0 for fixed entries
    std::string name;
    FiniteLattice lattice;  // element labels carry the figure's landmark symbols
};

// Parses the documented cover-list format (see core/data/catalog/FORMAT.md).
FiniteLattice parse_cover_list(const std::string& text, const std::string& what = "cover list");

// name (file stem) -> raw transcription text for every bundled figure file
const std::map<std::string, std::string>& figure_transcriptions();
// loads one bundled transcription by stem, e.g. "n5", "m2", "sstar1"
FiniteLattice figure_lattice(const std::string& stem);

CatalogEntry build_entry(CatalogId id, int param = 0);
// all fixed entries plus the four parametric families at 1..max_param
std::vector<CatalogEntry> list_entries(int max_param);

// Finds the catalog entry isomorphic to l, trying parametric indices up to
// max_param; size screens keep this fast.
std::optional<std::pair<CatalogEntry, LatticeEmbedding>> identify_in_catalog(
    const FiniteLattice& l, int max_param = 8);

}  // namespace conlat
