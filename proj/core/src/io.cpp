#include "conlat/io.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace conlat {

namespace {

struct Cursor {
    std::istringstream in;
    std::string line;
    int lineno = 0;

    explicit Cursor(const std::string& text) : in(text) {}

    // next non-empty, comment-stripped line
    bool next(std::string& out) {
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            bool blank = true;
            for (char c : line)
                if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
            if (!blank) {
                out = line;
                return true;
            }
        }
        return false;
    }
};

// parses a block list like [[0,1],[2,3]] and validates disjointness/covering
Partition parse_block_list(const std::string& text, int n, const std::string& name, int lineno) {
    std::vector<std::vector<int>> blocks;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (i >= text.size() || text[i] != c)
            throw ParseError(lineno, "partition '" + name + "': expected '" + std::string(1, c) +
                                         "' in block list");
        ++i;
    };
    expect('[');
    skip_ws();
    while (i < text.size() && text[i] == '[') {
        ++i;
        std::vector<int> block;
        skip_ws();
        while (i < text.size() && text[i] != ']') {
            std::size_t consumed = 0;
            int v = 0;
            try {
                v = std::stoi(text.substr(i), &consumed);
            } catch (...) {
                throw ParseError(lineno, "partition '" + name + "': bad element in block list");
            }
            i += consumed;
            block.push_back(v);
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                skip_ws();
            }
        }
        expect(']');
        blocks.push_back(std::move(block));
        skip_ws();
        if (i < text.size() && text[i] == ',') {
            ++i;
            skip_ws();
        }
    }
    expect(']');
    skip_ws();
    if (i != text.size())
        throw ParseError(lineno, "partition '" + name + "': trailing text after block list");

    std::vector<char> seen(n, 0);
    for (const auto& block : blocks) {
        if (block.empty()) throw ParseError(lineno, "partition '" + name + "': empty block");
        for (int v : block) {
            if (v < 0 || v >= n)
                throw ParseError(lineno, "partition '" + name + "': element " +
                                             std::to_string(v) + " outside universe 0.." +
                                             std::to_string(n - 1));
            if (seen[v])
                throw ParseError(lineno, "partition '" + name + "': element " +
                                             std::to_string(v) + " appears in two blocks");
            seen[v] = 1;
        }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v])
            throw ParseError(lineno, "partition '" + name + "': element " + std::to_string(v) +
                                         " missing from the blocks");
    return Partition::from_blocks(n, blocks);
}

}  // namespace

std::optional<Partition> AlgebraDocument::partition(const std::string& name) const {
    for (const auto& [n, p] : partitions)
        if (n == name) return p;
    return std::nullopt;
}

AlgebraDocument parse_algebra(const std::string& text) {
    Cursor cur(text);
    std::string line;
    if (!cur.next(line)) throw ParseError(1, "empty document (expected 'conlat-algebra v1')");
    {
        std::istringstream hs(line);
        std::string word, version;
        hs >> word >> version;
        if (word != "conlat-algebra" || version != "v1")
            throw ParseError(cur.lineno, "expected header 'conlat-algebra v1'");
    }

    AlgebraDocument doc;
    std::set<std::string> partition_names;
    bool have_universe = false;
    while (cur.next(line)) {
        std::istringstream ls(line);
        std::string keyword;
        ls >> keyword;
        if (keyword == "universe") {
            if (have_universe) throw ParseError(cur.lineno, "duplicate universe line");
            if (!(ls >> doc.universe_size) || doc.universe_size <= 0)
                throw ParseError(cur.lineno, "universe needs a positive size");
            std::string rest;
            if (ls >> rest) throw ParseError(cur.lineno, "trailing text after universe size");
            have_universe = true;
        } else if (keyword == "op") {
            if (!have_universe) throw ParseError(cur.lineno, "op before universe line");
            Operation op;
            std::string colon;
            if (!(ls >> op.name >> op.arity) || op.arity < 0)
                throw ParseError(cur.lineno, "op needs a name and a nonnegative arity");
            if (!(ls >> colon) || colon != ":")
                throw ParseError(cur.lineno, "op '" + op.name + "': expected ':' before table");
            std::size_t want = 1;
            for (int i = 0; i < op.arity; ++i) want *= static_cast<std::size_t>(doc.universe_size);
            const int start_line = cur.lineno;
            while (op.table.size() < want) {
                int v;
                if (ls >> v) {
                    if (v < 0 || v >= doc.universe_size)
                        throw ParseError(cur.lineno, "op '" + op.name + "': table value " +
                                                         std::to_string(v) + " outside universe");
                    op.table.push_back(v);
                    continue;
                }
                std::string stray;
                ls.clear();
                if (ls >> stray)
                    throw ParseError(cur.lineno, "op '" + op.name + "': bad table entry '" +
                                                     stray + "'");
                if (!cur.next(line))
                    throw ParseError(start_line, "op '" + op.name + "': table ended after " +
                                                     std::to_string(op.table.size()) + " of " +
                                                     std::to_string(want) + " entries");
                ls = std::istringstream(line);
            }
            std::string stray;
            if (ls >> stray)
                throw ParseError(cur.lineno, "op '" + op.name + "': trailing entry '" + stray +
                                                 "' past " + std::to_string(want) +
                                                 " table values (check the arity)");
            doc.operations.push_back(std::move(op));
        } else if (keyword == "partition") {
            if (!have_universe) throw ParseError(cur.lineno, "partition before universe line");
            std::string name, eq;
            if (!(ls >> name >> eq) || eq != "=")
                throw ParseError(cur.lineno, "partition needs `partition <name> = [[...]]`");
            if (!partition_names.insert(name).second)
                throw ParseError(cur.lineno, "duplicate partition name '" + name + "'");
            std::string rest;
            std::getline(ls, rest);
            doc.partitions.emplace_back(
                name, parse_block_list(rest, doc.universe_size, name, cur.lineno));
        } else {
            throw ParseError(cur.lineno, "unknown keyword '" + keyword + "'");
        }
    }
    if (!have_universe) throw ParseError(cur.lineno, "missing universe line");
    doc.algebra().validate();
    return doc;
}

std::string serialize_algebra(const AlgebraDocument& doc) {
    std::ostringstream os;
    os << "conlat-algebra v1\n";
    os << "universe " << doc.universe_size << "\n";
    for (const auto& op : doc.operations) {
        os << "op " << op.name << " " << op.arity << " :";
        for (int v : op.table) os << " " << v;
        os << "\n";
    }
    for (const auto& [name, p] : doc.partitions)
        os << "partition " << name << " = " << p.to_block_list() << "\n";
    return os.str();
}

std::string content_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace conlat
