#include "conlat/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "conlat/errors.hpp"

namespace conlat {

FiniteLattice FiniteLattice::from_leq(std::vector<std::string> labels, std::vector<uint8_t> leq) {
    FiniteLattice l;
    l.n_ = static_cast<int>(labels.size());
    l.labels_ = std::move(labels);
    l.leq_ = std::move(leq);
    const int n = l.n_;
    if (l.leq_.size() != static_cast<std::size_t>(n) * n)
        throw InputError("order matrix size mismatch");
    auto at = [&](int a, int b) -> uint8_t& { return l.leq_[static_cast<std::size_t>(a) * n + b]; };
    for (int a = 0; a < n; ++a) {
        if (!at(a, a)) throw InputError("order not reflexive at " + l.labels_[a]);
        for (int b = 0; b < n; ++b) {
            if (a != b && at(a, b) && at(b, a))
                throw InputError("order not antisymmetric at " + l.labels_[a] + "," + l.labels_[b]);
            if (!at(a, b)) continue;
            for (int c = 0; c < n; ++c)
                if (at(b, c) && !at(a, c))
                    throw InputError("order not transitive at " + l.labels_[a] + "," +
                                     l.labels_[b] + "," + l.labels_[c]);
        }
    }
    l.meet_.assign(static_cast<std::size_t>(n) * n, -1);
    l.join_.assign(static_cast<std::size_t>(n) * n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            int m = -1, j = -1;
            for (int c = 0; c < n; ++c) {
                if (at(c, a) && at(c, b) && (m < 0 || at(m, c))) m = c;
                if (at(a, c) && at(b, c) && (j < 0 || at(c, j))) j = c;
            }
            // the greatest lower bound must dominate every lower bound
            for (int c = 0; c < n; ++c) {
                if (at(c, a) && at(c, b) && (m < 0 || !at(c, m)))
                    throw InputError("no meet for " + l.labels_[a] + "," + l.labels_[b]);
                if (at(a, c) && at(b, c) && (j < 0 || !at(j, c)))
                    throw InputError("no join for " + l.labels_[a] + "," + l.labels_[b]);
            }
            l.meet_[static_cast<std::size_t>(a) * n + b] = m;
            l.join_[static_cast<std::size_t>(a) * n + b] = j;
        }
    }
    l.bottom_ = l.top_ = 0;
    for (int c = 0; c < n; ++c) {
        l.bottom_ = l.meet(l.bottom_, c);
        l.top_ = l.join(l.top_, c);
    }
    return l;
}

FiniteLattice FiniteLattice::from_covers(std::vector<std::string> labels,
                                         const std::vector<std::pair<int, int>>& covers) {
    const int n = static_cast<int>(labels.size());
    std::vector<uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) leq[static_cast<std::size_t>(a) * n + a] = 1;
    for (auto [a, b] : covers) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw InputError("cover index out of range");
        leq[static_cast<std::size_t>(a) * n + b] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a)
            if (leq[static_cast<std::size_t>(a) * n + k])
                for (int b = 0; b < n; ++b)
                    if (leq[static_cast<std::size_t>(k) * n + b])
                        leq[static_cast<std::size_t>(a) * n + b] = 1;
    return from_leq(std::move(labels), std::move(leq));
}

std::optional<int> FiniteLattice::index_of(const std::string& label) const {
    for (int i = 0; i < n_; ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

std::vector<std::pair<int, int>> FiniteLattice::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int b = 0; b < n_; ++b) {
        for (int a = 0; a < n_; ++a) {
            if (a == b || !leq(a, b)) continue;
            bool covered = true;
            for (int c = 0; c < n_ && covered; ++c)
                if (c != a && c != b && leq(a, c) && leq(c, b)) covered = false;
            if (covered) out.emplace_back(a, b);
        }
    }
    return out;
}

std::vector<int> FiniteLattice::heights() const {
    std::vector<int> h(n_, 0);
    std::vector<int> order(n_);
    for (int i = 0; i < n_; ++i) order[i] = i;
    std::vector<int> downsize(n_, 0);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (leq(b, a)) ++downsize[a];
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return downsize[a] < downsize[b]; });
    for (int x : order)
        for (int y = 0; y < n_; ++y)
            if (y != x && leq(y, x)) h[x] = std::max(h[x], h[y] + 1);
    return h;
}

std::optional<std::string> FiniteLattice::check_axioms() const {
    for (int a = 0; a < n_; ++a) {
        if (meet(a, a) != a) return "meet not idempotent at " + labels_[a];
        if (join(a, a) != a) return "join not idempotent at " + labels_[a];
        for (int b = 0; b < n_; ++b) {
            if (meet(a, b) != meet(b, a)) return "meet not commutative";
            if (join(a, b) != join(b, a)) return "join not commutative";
            if (join(a, meet(a, b)) != a || meet(a, join(a, b)) != a)
                return "absorption fails at " + labels_[a] + "," + labels_[b];
            if (!leq(meet(a, b), a) || !leq(a, join(a, b)))
                return "meet/join inconsistent with order at " + labels_[a] + "," + labels_[b];
            for (int c = 0; c < n_; ++c) {
                if (meet(meet(a, b), c) != meet(a, meet(b, c))) return "meet not associative";
                if (join(join(a, b), c) != join(a, join(b, c))) return "join not associative";
            }
        }
    }
    return std::nullopt;
}

bool FiniteLattice::is_modular() const {
    for (int x = 0; x < n_; ++x)
        for (int z = 0; z < n_; ++z) {
            if (!leq(x, z)) continue;
            for (int y = 0; y < n_; ++y)
                if (join(x, meet(y, z)) != meet(join(x, y), z)) return false;
        }
    return true;
}

bool FiniteLattice::is_distributive() const {
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            for (int z = 0; z < n_; ++z)
                if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return false;
    return true;
}

bool FiniteLattice::is_meet_semidistributive() const {
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            for (int z = 0; z < n_; ++z)
                if (meet(x, y) == meet(x, z) && meet(x, join(y, z)) != meet(x, y)) return false;
    return true;
}

bool FiniteLattice::is_join_semidistributive() const {
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            for (int z = 0; z < n_; ++z)
                if (join(x, y) == join(x, z) && join(x, meet(y, z)) != join(x, y)) return false;
    return true;
}

bool FiniteLattice::is_semidistributive() const {
    return is_meet_semidistributive() && is_join_semidistributive();
}

bool FiniteLattice::satisfies_whitman() const {
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            const int ab = meet(a, b);
            for (int c = 0; c < n_; ++c)
                for (int d = 0; d < n_; ++d) {
                    const int cd = join(c, d);
                    if (!leq(ab, cd)) continue;
                    if (!(leq(a, cd) || leq(b, cd) || leq(ab, c) || leq(ab, d))) return false;
                }
        }
    return true;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

}  // namespace

std::string FiniteLattice::to_dot(const std::string& graph_name) const {
    const auto h = heights();
    std::ostringstream os;
    os << "digraph \"" << dot_escape(graph_name) << "\" {\n";
    os << "  rankdir=BT;\n  node [shape=plaintext];\n";
    for (int i = 0; i < n_; ++i)
        os << "  n" << i << " [label=\"" << dot_escape(labels_[i]) << "\"];\n";
    for (auto [a, b] : covers()) os << "  n" << a << " -> n" << b << ";\n";
    const int max_h = n_ ? *std::max_element(h.begin(), h.end()) : 0;
    for (int level = 0; level <= max_h; ++level) {
        std::vector<int> rank;
        for (int i = 0; i < n_; ++i)
            if (h[i] == level) rank.push_back(i);
        if (rank.empty()) continue;
        os << "  { rank=same;";
        for (int i : rank) os << " n" << i << ";";
        os << " }\n";
    }
    os << "}\n";
    return os.str();
}

std::optional<int> PartitionSublattice::index_of(const Partition& p) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == p) return static_cast<int>(i);
    return std::nullopt;
}

PartitionSublattice lattice_from_partitions(const std::vector<Partition>& gens,
                                            const std::vector<std::string>& names,
                                            std::size_t max_elements) {
    if (gens.empty()) throw InputError("lattice_from_partitions: no generators");
    const int psize = gens.front().size();
    for (const auto& g : gens)
        if (g.size() != psize) throw InputError("lattice_from_partitions: size mismatch");

    std::unordered_map<Partition, std::string, PartitionHash> name_of;
    std::vector<Partition> elems;
    auto add = [&](const Partition& p, const std::string& nm) {
        auto [it, fresh] = name_of.emplace(p, nm);
        if (fresh) {
            elems.push_back(p);
            if (elems.size() > max_elements)
                throw BudgetError("sublattice closure exceeded " + std::to_string(max_elements) +
                                  " elements");
        }
        return fresh;
    };
    for (std::size_t i = 0; i < gens.size(); ++i)
        add(gens[i], i < names.size() ? names[i] : gens[i].to_block_list());

    std::size_t frontier_begin = 0;
    while (frontier_begin < elems.size()) {
        const std::size_t frontier_end = elems.size();
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            for (std::size_t j = 0; j < frontier_end; ++j) {
                Partition a = elems[i], b = elems[j];
                Partition m = meet(a, b);
                if (!name_of.count(m))
                    add(m, "(" + name_of[a] + "∧" + name_of[b] + ")");
                Partition v = join(a, b);
                if (!name_of.count(v))
                    add(v, "(" + name_of[a] + "∨" + name_of[b] + ")");
            }
        }
        frontier_begin = frontier_end;
    }

    std::sort(elems.begin(), elems.end());
    const int n = static_cast<int>(elems.size());
    std::vector<uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (elems[a].refines(elems[b])) leq[static_cast<std::size_t>(a) * n + b] = 1;
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = name_of[elems[i]];
    PartitionSublattice out;
    out.lattice = FiniteLattice::from_leq(std::move(labels), std::move(leq));
    out.elements = std::move(elems);
    return out;
}

}  // namespace conlat
