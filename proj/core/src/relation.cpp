#include "conlat/relation.hpp"

#include <bit>
#include <stdexcept>

namespace conlat {

BinaryRelation BinaryRelation::identity(int n) {
    BinaryRelation r(n);
    for (int i = 0; i < n; ++i) r.add(i, i);
    return r;
}

BinaryRelation BinaryRelation::full(int n) {
    BinaryRelation r(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) r.add(a, b);
    return r;
}

BinaryRelation BinaryRelation::from_partition(const Partition& p) {
    BinaryRelation r(p.size());
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (p.same_block(a, b)) r.add(a, b);
    return r;
}

std::size_t BinaryRelation::pair_count() const {
    std::size_t c = 0;
    for (auto w : bits_) c += std::popcount(w);
    return c;
}

std::vector<std::pair<int, int>> BinaryRelation::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (contains(a, b)) out.emplace_back(a, b);
    return out;
}

bool BinaryRelation::is_reflexive() const {
    for (int a = 0; a < n_; ++a)
        if (!contains(a, a)) return false;
    return true;
}

bool BinaryRelation::is_symmetric() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (contains(a, b) != contains(b, a)) return false;
    return true;
}

bool BinaryRelation::subset_of(const BinaryRelation& other) const {
    if (n_ != other.n_) throw std::invalid_argument("relation size mismatch");
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~other.bits_[i]) return false;
    return true;
}

Partition BinaryRelation::equivalence_closure() const {
    auto ps = pairs();
    return Partition::from_pairs(n_, ps);
}

BinaryRelation compose(const BinaryRelation& r, const BinaryRelation& s) {
    if (r.n_ != s.n_) throw std::invalid_argument("relation size mismatch");
    const int n = r.n_;
    BinaryRelation out(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (r.contains(a, b))
                for (int c = 0; c < n; ++c)
                    if (s.contains(b, c)) out.add(a, c);
    return out;
}

BinaryRelation intersect(const BinaryRelation& r, const BinaryRelation& s) {
    if (r.n_ != s.n_) throw std::invalid_argument("relation size mismatch");
    BinaryRelation out(r.n_);
    for (std::size_t i = 0; i < out.bits_.size(); ++i) out.bits_[i] = r.bits_[i] & s.bits_[i];
    return out;
}

BinaryRelation unite(const BinaryRelation& r, const BinaryRelation& s) {
    if (r.n_ != s.n_) throw std::invalid_argument("relation size mismatch");
    BinaryRelation out(r.n_);
    for (std::size_t i = 0; i < out.bits_.size(); ++i) out.bits_[i] = r.bits_[i] | s.bits_[i];
    return out;
}

}  // namespace conlat
