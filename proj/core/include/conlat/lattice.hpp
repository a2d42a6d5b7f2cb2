#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "conlat/partition.hpp"

namespace conlat {

// An explicit finite lattice: indexed elements, order matrix, meet/join tables.
// Construction validates that leq is a partial order with all glbs/lubs.
class FiniteLattice {
public:
    FiniteLattice() = default;  // empty placeholder; factories build real lattices

    static FiniteLattice from_leq(std::vector<std::string> labels, std::vector<uint8_t> leq);
    static FiniteLattice from_covers(std::vector<std::string> labels,
                                     const std::vector<std::pair<int, int>>& covers);

    int size() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int x) const { return labels_[x]; }
    void set_label(int x, std::string l) { labels_[x] = std::move(l); }

    bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a) * n_ + b] != 0; }
    int meet(int a, int b) const { return meet_[static_cast<std::size_t>(a) * n_ + b]; }
    int join(int a, int b) const { return join_[static_cast<std::size_t>(a) * n_ + b]; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }

    std::optional<int> index_of(const std::string& label) const;

    // covering pairs (a,b) with a ≺ b, ordered by (b,a) index
    std::vector<std::pair<int, int>> covers() const;
    // length of a longest chain from the bottom to each element
    std::vector<int> heights() const;

    // absorption, commutativity, idempotence, meet/join-vs-order consistency;
    // returns a violation description or nullopt
    std::optional<std::string> check_axioms() const;

    bool is_modular() const;         // x≤z ⇒ x∨(y∧z) = (x∨y)∧z
    bool is_distributive() const;    // x∧(y∨z) = (x∧y)∨(x∧z)
    bool is_meet_semidistributive() const;
    bool is_join_semidistributive() const;
    bool is_semidistributive() const;
    bool satisfies_whitman() const;  // a∧b ≤ c∨d ⇒ a ≤ c∨d or b ≤ c∨d or a∧b ≤ c or a∧b ≤ d
    // Nation's characterization of finite projective lattices
    bool is_projective_finite() const { return is_semidistributive() && satisfies_whitman(); }

    // Hasse diagram as Graphviz source: digraph, rankdir=BT, cover edges only,
    // one rank per height, ties broken by element index
    std::string to_dot(const std::string& graph_name = "lattice") const;

private:
    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<uint8_t> leq_;
    std::vector<int> meet_, join_;
    int bottom_ = -1, top_ = -1;
};

// A lattice whose elements are partitions (the generated sublattice of a
// congruence lattice); elements_ is index-aligned with the lattice.
struct PartitionSublattice {
    FiniteLattice lattice;
    std::vector<Partition> elements;

    std::optional<int> index_of(const Partition& p) const;
};

// Closes gens under meet and join; elements are labeled by expressions over
// the generator names when given (shortest-first), else by block lists.
// Throws BudgetError if the closure exceeds max_elements.
PartitionSublattice lattice_from_partitions(const std::vector<Partition>& gens,
                                            const std::vector<std::string>& names = {},
                                            std::size_t max_elements = 10000);

}  // namespace conlat
