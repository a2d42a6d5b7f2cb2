#include "conlat/algebra.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <unordered_set>

#include "conlat/errors.hpp"

namespace conlat {

namespace {

std::size_t pow_size(int n, int k) {
    std::size_t s = 1;
    for (int i = 0; i < k; ++i) s *= static_cast<std::size_t>(n);
    return s;
}

// union-find with a merge log so operation closure can chase new pairs
struct MergeTracker {
    std::vector<int> parent;
    std::deque<std::pair<int, int>> fresh;  // newly merged root pairs

    explicit MergeTracker(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[std::max(ra, rb)] = std::min(ra, rb);
        fresh.emplace_back(ra, rb);
        return true;
    }
};

}  // namespace

int Operation::eval(int n, std::span<const int> args) const {
    std::size_t idx = 0;
    for (int a : args) idx = idx * n + static_cast<std::size_t>(a);
    return table[idx];
}

void FiniteAlgebra::validate() const {
    if (universe_size <= 0) throw InputError("universe size must be positive");
    for (const auto& op : operations) {
        if (op.arity < 0) throw InputError("operation '" + op.name + "': negative arity");
        if (op.table.size() != pow_size(universe_size, op.arity))
            throw InputError("operation '" + op.name + "': table has " +
                             std::to_string(op.table.size()) + " entries, expected " +
                             std::to_string(pow_size(universe_size, op.arity)));
        for (int v : op.table)
            if (v < 0 || v >= universe_size)
                throw InputError("operation '" + op.name + "': table value " + std::to_string(v) +
                                 " outside universe");
    }
}

bool is_congruence(const FiniteAlgebra& alg, const Partition& p) {
    const int n = alg.universe_size;
    if (p.size() != n) throw InputError("partition size does not match universe");
    std::vector<int> args;
    for (const auto& op : alg.operations) {
        if (op.arity == 0) continue;
        const std::size_t tuples = pow_size(n, op.arity);
        args.assign(op.arity, 0);
        for (std::size_t t = 0; t < tuples; ++t) {
            // decode tuple t
            std::size_t rest = t;
            for (int i = op.arity - 1; i >= 0; --i) {
                args[i] = static_cast<int>(rest % n);
                rest /= n;
            }
            const int base = op.table[t];
            for (int i = 0; i < op.arity; ++i) {
                const int orig = args[i];
                for (int b = 0; b < n; ++b) {
                    if (b == orig || !p.same_block(orig, b)) continue;
                    args[i] = b;
                    if (!p.same_block(base, op.eval(n, args))) return false;
                }
                args[i] = orig;
            }
        }
    }
    return true;
}

Partition cg(const FiniteAlgebra& alg, std::span<const std::pair<int, int>> seed) {
    const int n = alg.universe_size;
    MergeTracker uf(n);
    for (auto [a, b] : seed) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw InputError("seed pair outside universe");
        uf.unite(a, b);
    }
    if (!alg.operations.empty()) {
        std::vector<int> args;
        while (!uf.fresh.empty()) {
            auto [a, b] = uf.fresh.front();
            uf.fresh.pop_front();
            for (const auto& op : alg.operations) {
                if (op.arity == 0) continue;
                const std::size_t others = pow_size(n, op.arity - 1);
                args.assign(op.arity, 0);
                for (int pos = 0; pos < op.arity; ++pos) {
                    for (std::size_t rest = 0; rest < others; ++rest) {
                        std::size_t r = rest;
                        for (int i = op.arity - 1; i >= 0; --i) {
                            if (i == pos) continue;
                            args[i] = static_cast<int>(r % n);
                            r /= n;
                        }
                        args[pos] = a;
                        const int va = op.eval(n, args);
                        args[pos] = b;
                        const int vb = op.eval(n, args);
                        if (va != vb) uf.unite(va, vb);
                    }
                }
            }
        }
    }
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(n);
    for (int x = 0; x < n; ++x) pairs.emplace_back(x, uf.find(x));
    return Partition::from_pairs(n, pairs);
}

Partition cg(const FiniteAlgebra& alg, const Partition& seed) {
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < seed.size(); ++x)
        if (seed.rep(x) != x) pairs.emplace_back(x, seed.rep(x));
    return cg(alg, pairs);
}

std::vector<Partition> principal_congruences(const FiniteAlgebra& alg) {
    const int n = alg.universe_size;
    std::set<Partition> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            std::pair<int, int> pr[1] = {{a, b}};
            out.insert(cg(alg, pr));
        }
    return {out.begin(), out.end()};
}

namespace {

// enumerate set partitions via restricted growth strings
template <typename Fn>
void for_each_partition(int n, Fn&& fn) {
    std::vector<int> assign(n, 0);
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (i == n) {
            fn(assign);
            return;
        }
        for (int b = 0; b <= used; ++b) {
            assign[i] = b;
            self(self, i + 1, std::max(used, b + 1));
        }
    };
    rec(rec, 0, 0);
}

}  // namespace

std::vector<Partition> all_congruences(const FiniteAlgebra& alg, std::size_t max_congruences,
                                       int enumeration_limit) {
    const int n = alg.universe_size;
    std::set<Partition> out;
    if (n <= enumeration_limit) {
        for_each_partition(n, [&](const std::vector<int>& assign) {
            std::vector<std::pair<int, int>> pairs;
            std::vector<int> first(n, -1);
            for (int x = 0; x < n; ++x) {
                if (first[assign[x]] < 0)
                    first[assign[x]] = x;
                else
                    pairs.emplace_back(first[assign[x]], x);
            }
            Partition p = Partition::from_pairs(n, pairs);
            if (alg.operations.empty() || is_congruence(alg, p)) out.insert(p);
        });
        if (out.size() > max_congruences) throw BudgetError("congruence budget exceeded");
        return {out.begin(), out.end()};
    }
    // join-closure of the principal congruences
    std::vector<Partition> work = principal_congruences(alg);
    out.insert(Partition::bottom(n));
    out.insert(work.begin(), work.end());
    std::vector<Partition> frontier = work;
    while (!frontier.empty()) {
        std::vector<Partition> next;
        std::vector<Partition> current(out.begin(), out.end());
        for (const auto& a : frontier) {
            for (const auto& b : current) {
                Partition j = join(a, b);
                if (out.insert(j).second) next.push_back(j);
                if (out.size() > max_congruences)
                    throw BudgetError("congruence budget exceeded (cap " +
                                      std::to_string(max_congruences) + ")");
            }
        }
        frontier = std::move(next);
    }
    return {out.begin(), out.end()};
}

}  // namespace conlat
