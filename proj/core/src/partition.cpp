#include "conlat/partition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace conlat {

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

Partition Partition::normalize(std::vector<int> parent) {
    const int n = static_cast<int>(parent.size());
    std::vector<int> rep(n);
    std::vector<int> least(n, -1);
    for (int x = 0; x < n; ++x) {
        int r = find_root(parent, x);
        if (least[r] < 0) least[r] = x;  // ascending scan: first hit is least
        rep[x] = least[r];
    }
    return Partition(std::move(rep));
}

Partition Partition::bottom(int n) {
    std::vector<int> rep(n);
    for (int i = 0; i < n; ++i) rep[i] = i;
    return Partition(std::move(rep));
}

Partition Partition::top(int n) {
    if (n == 0) return Partition(std::vector<int>{});
    return Partition(std::vector<int>(n, 0));
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    for (const auto& block : blocks) {
        for (int x : block) {
            if (x < 0 || x >= n) throw std::out_of_range("block element out of range");
            int a = find_root(parent, block.front());
            int b = find_root(parent, x);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    return normalize(std::move(parent));
}

Partition Partition::from_pairs(int n, std::span<const std::pair<int, int>> pairs) {
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw std::out_of_range("pair element out of range");
        int ra = find_root(parent, a);
        int rb = find_root(parent, b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    return normalize(std::move(parent));
}

int Partition::block_count() const {
    int count = 0;
    for (int x = 0; x < size(); ++x)
        if (rep_[x] == x) ++count;
    return count;
}

std::vector<std::vector<int>> Partition::blocks() const {
    std::map<int, std::vector<int>> by_rep;
    for (int x = 0; x < size(); ++x) by_rep[rep_[x]].push_back(x);
    std::vector<std::vector<int>> out;
    out.reserve(by_rep.size());
    for (auto& [r, block] : by_rep) out.push_back(std::move(block));
    return out;
}

std::string Partition::to_string() const {
    std::string out;
    for (const auto& block : blocks()) {
        out += '|';
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(block[i]);
        }
    }
    out += '|';
    return out;
}

std::string Partition::to_block_list() const {
    std::string out = "[";
    bool first_block = true;
    for (const auto& block : blocks()) {
        if (!first_block) out += ',';
        first_block = false;
        out += '[';
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(block[i]);
        }
        out += ']';
    }
    out += ']';
    return out;
}

bool Partition::refines(const Partition& other) const {
    if (size() != other.size()) throw std::invalid_argument("partition size mismatch");
    for (int x = 0; x < size(); ++x)
        if (other.rep_[x] != other.rep_[rep_[x]]) return false;
    return true;
}

std::size_t Partition::hash() const {
    std::size_t h = 1469598103934665603ull;  // FNV-1a
    for (int v : rep_) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

Partition meet(const Partition& p, const Partition& q) {
    if (p.size() != q.size()) throw std::invalid_argument("partition size mismatch");
    const int n = p.size();
    std::map<std::pair<int, int>, int> first_seen;
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(n);
    for (int x = 0; x < n; ++x) {
        auto [it, fresh] = first_seen.emplace(std::make_pair(p.rep(x), q.rep(x)), x);
        pairs.emplace_back(x, it->second);
    }
    return Partition::from_pairs(n, pairs);
}

Partition join(const Partition& p, const Partition& q) {
    if (p.size() != q.size()) throw std::invalid_argument("partition size mismatch");
    const int n = p.size();
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(2 * n);
    for (int x = 0; x < n; ++x) {
        pairs.emplace_back(x, p.rep(x));
        pairs.emplace_back(x, q.rep(x));
    }
    return Partition::from_pairs(n, pairs);
}

}  // namespace conlat
