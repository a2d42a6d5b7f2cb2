#include "conlat/subpower.hpp"

#include <algorithm>

#include "conlat/errors.hpp"

namespace conlat {

long long SubpowerContext::encode(const std::vector<int>& tuple) const {
    long long key = 0;
    for (int v : tuple) key = key * base.universe_size + v;
    return key;
}

int SubpowerContext::index_of(const std::vector<int>& tuple) const {
    auto it = tuple_index.find(encode(tuple));
    return it == tuple_index.end() ? -1 : it->second;
}

std::string SubpowerContext::tuple_name(int idx) const {
    std::string out = "(";
    const auto& t = universe[idx];
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(t[i]);
    }
    return out + ")";
}

SubpowerContext build_subpower(const FiniteAlgebra& alg, const Partition& theta, int power,
                               std::size_t max_universe) {
    if (power < 2) throw InputError("subpower needs power >= 2");
    if (theta.size() != alg.universe_size) throw InputError("congruence size mismatch");
    if (!is_congruence(alg, theta))
        throw InputError("the doubled partition is not a congruence of the base algebra");

    SubpowerContext ctx;
    ctx.base = alg;
    ctx.doubled = theta;
    ctx.power = power;

    // tuples pairwise related by theta = per block B, all of B^power;
    // generated in lexicographic order by walking the universe
    std::vector<int> tuple(power);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == power) {
            ctx.universe.push_back(tuple);
            if (ctx.universe.size() > max_universe)
                throw BudgetError("subpower universe exceeds " + std::to_string(max_universe));
            return;
        }
        for (int v = 0; v < alg.universe_size; ++v) {
            if (pos > 0 && !theta.same_block(tuple[0], v)) continue;
            tuple[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);

    for (std::size_t i = 0; i < ctx.universe.size(); ++i)
        ctx.tuple_index.emplace(ctx.encode(ctx.universe[i]), static_cast<int>(i));

    // coordinatewise operations on universe indices
    const int m = static_cast<int>(ctx.universe.size());
    ctx.algebra.universe_size = m;
    for (const auto& op : alg.operations) {
        Operation lifted;
        lifted.name = op.name;
        lifted.arity = op.arity;
        std::size_t rows = 1;
        for (int i = 0; i < op.arity; ++i) rows *= static_cast<std::size_t>(m);
        lifted.table.resize(rows);
        std::vector<int> args(op.arity), coord(op.arity);
        std::vector<int> result(power);
        for (std::size_t t = 0; t < rows; ++t) {
            std::size_t rest = t;
            for (int i = op.arity - 1; i >= 0; --i) {
                args[i] = static_cast<int>(rest % m);
                rest /= m;
            }
            for (int c = 0; c < power; ++c) {
                for (int i = 0; i < op.arity; ++i) coord[i] = ctx.universe[args[i]][c];
                result[c] = op.eval(alg.universe_size, coord);
            }
            const int idx = ctx.index_of(result);
            // closure under coordinatewise operations holds because theta is
            // a congruence
            if (idx < 0) throw InputError("subpower not closed under " + op.name);
            lifted.table[t] = idx;
        }
        ctx.algebra.operations.push_back(std::move(lifted));
    }
    return ctx;
}

Partition lift(const SubpowerContext& ctx, const Partition& theta, int side) {
    if (side < 0 || side >= ctx.power) throw InputError("lift side out of range");
    if (theta.size() != ctx.base.universe_size) throw InputError("lift size mismatch");
    const int m = static_cast<int>(ctx.universe.size());
    std::vector<std::pair<int, int>> pairs;
    std::unordered_map<int, int> first_with_rep;
    for (int i = 0; i < m; ++i) {
        const int r = theta.rep(ctx.universe[i][side]);
        auto [it, fresh] = first_with_rep.emplace(r, i);
        if (!fresh) pairs.emplace_back(it->second, i);
    }
    return Partition::from_pairs(m, pairs);
}

Partition projection_kernel(const SubpowerContext& ctx, int side) {
    return lift(ctx, Partition::bottom(ctx.base.universe_size), side);
}

Partition diagonal_restriction(const SubpowerContext& ctx, const Partition& on_subpower) {
    const int n = ctx.base.universe_size;
    std::vector<int> diag(n);
    std::vector<int> tuple(ctx.power);
    for (int a = 0; a < n; ++a) {
        std::fill(tuple.begin(), tuple.end(), a);
        diag[a] = ctx.index_of(tuple);
    }
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (on_subpower.same_block(diag[a], diag[b])) pairs.emplace_back(a, b);
    return Partition::from_pairs(n, pairs);
}

std::vector<DoublingCheck> verify_doubling_identities(const SubpowerContext& ctx,
                                                      const std::vector<Partition>& thetas) {
    std::vector<DoublingCheck> out;
    const Partition eta0 = projection_kernel(ctx, 0);
    const Partition eta1 = projection_kernel(ctx, 1);

    for (const auto& th : thetas) {
        if (!is_congruence(ctx.base, th)) {
            out.push_back({"lift identities for " + th.to_block_list(), false, true,
                           "skipped: not a congruence of the base algebra"});
            continue;
        }
        const Partition t0 = lift(ctx, th, 0);
        const Partition t1 = lift(ctx, th, 1);
        if (ctx.doubled.refines(th)) {
            DoublingCheck c{"(1) theta<=psi implies psi_0=psi_1 for psi=" + th.to_block_list()};
            c.holds = (t0 == t1);
            if (!c.holds) c.detail = "psi_0 != psi_1";
            out.push_back(std::move(c));
        }
        for (int side = 0; side < 2; ++side) {
            DoublingCheck c{"(2) psi_i = eta_i v (psi_0^psi_1), psi=" + th.to_block_list() +
                            ", i=" + std::to_string(side)};
            const Partition rhs = join(side == 0 ? eta0 : eta1, meet(t0, t1));
            c.holds = (rhs == (side == 0 ? t0 : t1));
            if (!c.holds) c.detail = "lift differs from eta v diagonal meet";
            out.push_back(std::move(c));
        }
    }
    DoublingCheck c{"(3) theta_0 = eta_0 v eta_1"};
    c.holds = (lift(ctx, ctx.doubled, 0) == join(eta0, eta1));
    if (!c.holds) c.detail = "kernel join differs from the doubled congruence's lift";
    out.push_back(std::move(c));
    return out;
}

}  // namespace conlat
