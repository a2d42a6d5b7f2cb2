#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "conlat/partition.hpp"

namespace conlat {

// A binary relation on {0..n-1}, stored as an n*n bit matrix.
class BinaryRelation {
public:
    BinaryRelation() = default;
    explicit BinaryRelation(int n) : n_(n), bits_((static_cast<std::size_t>(n) * n + 63) / 64, 0) {}

    static BinaryRelation identity(int n);
    static BinaryRelation full(int n);
    static BinaryRelation from_partition(const Partition& p);

    int size() const { return n_; }
    bool contains(int a, int b) const {
        std::size_t i = static_cast<std::size_t>(a) * n_ + b;
        return (bits_[i >> 6] >> (i & 63)) & 1u;
    }
    void add(int a, int b) {
        std::size_t i = static_cast<std::size_t>(a) * n_ + b;
        bits_[i >> 6] |= (std::uint64_t{1} << (i & 63));
    }

    std::size_t pair_count() const;
    std::vector<std::pair<int, int>> pairs() const;

    bool is_reflexive() const;
    bool is_symmetric() const;
    bool subset_of(const BinaryRelation& other) const;

    bool operator==(const BinaryRelation& other) const = default;

    // Eq(this): reflexive-symmetric-transitive closure as a Partition
    Partition equivalence_closure() const;

private:
    int n_ = 0;
    std::vector<std::uint64_t> bits_;

    friend BinaryRelation compose(const BinaryRelation&, const BinaryRelation&);
    friend BinaryRelation intersect(const BinaryRelation&, const BinaryRelation&);
    friend BinaryRelation unite(const BinaryRelation&, const BinaryRelation&);
};

// {(a,c) | ∃b: (a,b) ∈ r, (b,c) ∈ s} — first an r step, then an s step
BinaryRelation compose(const BinaryRelation& r, const BinaryRelation& s);
BinaryRelation intersect(const BinaryRelation& r, const BinaryRelation& s);
BinaryRelation unite(const BinaryRelation& r, const BinaryRelation& s);

}  // namespace conlat
