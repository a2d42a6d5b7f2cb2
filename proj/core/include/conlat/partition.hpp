#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace conlat {

// An equivalence relation on {0..n-1} in canonical block form. rep(x) is the
// least element of x's class, so two partitions are equal iff their rep arrays
// are equal. Doubles as congruence and as lattice element.
class Partition {
public:
    Partition() = default;

    static Partition bottom(int n);  // all singletons
    static Partition top(int n);     // one block
    static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
    static Partition from_pairs(int n, std::span<const std::pair<int, int>> pairs);

    int size() const { return static_cast<int>(rep_.size()); }
    int rep(int x) const { return rep_[x]; }
    bool same_block(int x, int y) const { return rep_[x] == rep_[y]; }

    int block_count() const;
    std::vector<std::vector<int>> blocks() const;
    // blocks rendered as |0 1|2 3|; singletons included
    std::string to_string() const;
    // block-list text like [[0,1],[2,3]]; singletons included
    std::string to_block_list() const;

    // true iff every block of *this is contained in a block of other
    bool refines(const Partition& other) const;

    bool operator==(const Partition& other) const { return rep_ == other.rep_; }
    auto operator<=>(const Partition& other) const { return rep_ <=> other.rep_; }

    std::size_t hash() const;

private:
    explicit Partition(std::vector<int> rep) : rep_(std::move(rep)) {}
    static Partition normalize(std::vector<int> parent);

    std::vector<int> rep_;
};

// coarsest common refinement: x~y iff x~_p y and x~_q y
Partition meet(const Partition& p, const Partition& q);
// Eq(p ∪ q): transitive closure of the union
Partition join(const Partition& p, const Partition& q);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const { return p.hash(); }
};

}  // namespace conlat
