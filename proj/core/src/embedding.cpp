#include "conlat/embedding.hpp"

#include <algorithm>
#include <array>

namespace conlat {

namespace {

struct Profile {
    int height;
    int covers_up, covers_down;
    int upset, downset;

    auto operator<=>(const Profile&) const = default;
};

std::vector<Profile> profiles(const FiniteLattice& l) {
    const int n = l.size();
    std::vector<Profile> out(n);
    auto h = l.heights();
    for (int x = 0; x < n; ++x) {
        out[x].height = h[x];
        out[x].upset = out[x].downset = 0;
        out[x].covers_up = out[x].covers_down = 0;
        for (int y = 0; y < n; ++y) {
            if (l.leq(x, y)) ++out[x].upset;
            if (l.leq(y, x)) ++out[x].downset;
        }
    }
    for (auto [a, b] : l.covers()) {
        ++out[a].covers_up;
        ++out[b].covers_down;
    }
    return out;
}

// Search plan: pattern elements ordered so that as many as possible are the
// meet or join of two earlier ones; such elements have a single forced image,
// which keeps refutations cheap.
struct PlanStep {
    int element;
    int op_lhs = -1, op_rhs = -1;  // earlier elements whose meet/join force this
    bool is_meet = false;
};

std::vector<PlanStep> make_plan(const FiniteLattice& pat) {
    const int n = pat.size();
    std::vector<char> placed(n, 0);
    std::vector<PlanStep> plan;
    auto find_forced = [&]() -> std::optional<PlanStep> {
        for (int a = 0; a < n; ++a) {
            if (!placed[a]) continue;
            for (int b = 0; b < n; ++b) {
                if (!placed[b]) continue;
                const int m = pat.meet(a, b);
                if (!placed[m]) return PlanStep{m, a, b, true};
                const int j = pat.join(a, b);
                if (!placed[j]) return PlanStep{j, a, b, false};
            }
        }
        return std::nullopt;
    };
    auto h = pat.heights();
    while (static_cast<int>(plan.size()) < n) {
        if (auto forced = find_forced()) {
            placed[forced->element] = 1;
            plan.push_back(*forced);
            continue;
        }
        // free choice: pick the unplaced element with the most comparabilities
        // to the placed ones, height-ascending on ties
        int best = -1, best_score = -1;
        for (int x = 0; x < n; ++x) {
            if (placed[x]) continue;
            int score = 0;
            for (int y = 0; y < n; ++y)
                if (placed[y] && (pat.leq(x, y) || pat.leq(y, x))) ++score;
            if (score > best_score ||
                (score == best_score && best >= 0 && h[x] < h[best])) {
                best = x;
                best_score = score;
            }
        }
        placed[best] = 1;
        plan.push_back(PlanStep{best});
    }
    return plan;
}

struct Searcher {
    const FiniteLattice& pat;
    const FiniteLattice& host;
    bool bijective;
    std::vector<Profile> pp, hp;
    std::vector<PlanStep> plan;
    std::vector<int> mapping;
    std::vector<char> used;

    Searcher(const FiniteLattice& p, const FiniteLattice& h, bool bij)
        : pat(p), host(h), bijective(bij), pp(profiles(p)), hp(profiles(h)), plan(make_plan(p)) {
        mapping.assign(pat.size(), -1);
        used.assign(host.size(), 0);
    }

    bool candidate_ok(int x, int y) const {
        if (used[y]) return false;
        if (bijective) {
            if (pp[x] != hp[y]) return false;
        } else {
            if (hp[y].height < pp[x].height) return false;
            if (hp[y].upset < pp[x].upset || hp[y].downset < pp[x].downset) return false;
        }
        for (int z = 0; z < pat.size(); ++z) {
            const int mz = mapping[z];
            if (mz < 0) continue;
            if (pat.leq(x, z) != host.leq(y, mz)) return false;
            if (pat.leq(z, x) != host.leq(mz, y)) return false;
            const int mxz = mapping[pat.meet(x, z)];
            if (mxz >= 0 && mxz != host.meet(y, mz)) return false;
            const int jxz = mapping[pat.join(x, z)];
            if (jxz >= 0 && jxz != host.join(y, mz)) return false;
        }
        return true;
    }

    bool search(std::size_t i) {
        if (i == plan.size()) return verify();
        const auto& step = plan[i];
        const int x = step.element;
        if (step.op_lhs >= 0) {
            const int lhs = mapping[step.op_lhs], rhs = mapping[step.op_rhs];
            const int y = step.is_meet ? host.meet(lhs, rhs) : host.join(lhs, rhs);
            if (!candidate_ok(x, y)) return false;
            mapping[x] = y;
            used[y] = 1;
            if (search(i + 1)) return true;
            mapping[x] = -1;
            used[y] = 0;
            return false;
        }
        for (int y = 0; y < host.size(); ++y) {
            if (!candidate_ok(x, y)) continue;
            mapping[x] = y;
            used[y] = 1;
            if (search(i + 1)) return true;
            mapping[x] = -1;
            used[y] = 0;
        }
        return false;
    }

    bool verify() const {
        LatticeEmbedding e{mapping};
        return verify_embedding(pat, host, e);
    }
};

}  // namespace

bool verify_embedding(const FiniteLattice& pattern, const FiniteLattice& host,
                      const LatticeEmbedding& emb) {
    if (emb.map.size() != static_cast<std::size_t>(pattern.size())) return false;
    for (int a = 0; a < pattern.size(); ++a) {
        if (emb.map[a] < 0 || emb.map[a] >= host.size()) return false;
        for (int b = 0; b < pattern.size(); ++b) {
            if (a != b && emb.map[a] == emb.map[b]) return false;
            if (host.meet(emb.map[a], emb.map[b]) != emb.map[pattern.meet(a, b)]) return false;
            if (host.join(emb.map[a], emb.map[b]) != emb.map[pattern.join(a, b)]) return false;
        }
    }
    return true;
}

std::optional<LatticeEmbedding> find_embedding(const FiniteLattice& pattern,
                                               const FiniteLattice& host) {
    if (pattern.size() == 0 || pattern.size() > host.size()) return std::nullopt;
    Searcher s(pattern, host, /*bijective=*/false);
    if (s.search(0)) return LatticeEmbedding{s.mapping};
    return std::nullopt;
}

std::optional<LatticeEmbedding> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b) {
    if (a.size() != b.size()) return std::nullopt;
    if (a.size() == 0) return LatticeEmbedding{{}};
    {
        // cheap invariant screen before the backtracking search
        auto pa = profiles(a), pb = profiles(b);
        std::sort(pa.begin(), pa.end());
        std::sort(pb.begin(), pb.end());
        if (pa != pb) return std::nullopt;
    }
    Searcher s(a, b, /*bijective=*/true);
    if (s.search(0)) return LatticeEmbedding{s.mapping};
    return std::nullopt;
}

}  // namespace conlat
