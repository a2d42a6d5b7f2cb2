#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conlat/algebra.hpp"
#include "conlat/errors.hpp"
#include "conlat/partition.hpp"

namespace conlat {

// Parse failure with the offending line pinned.
struct ParseError : InputError {
    ParseError(int line, const std::string& message)
        : InputError("line " + std::to_string(line) + ": " + message), line_number(line) {}
    int line_number;
};

// A parsed algebra document: universe size, operation tables and named
// partitions whose blocks cover {0..n-1} exactly.
//
// Grammar (line oriented, '#' comments, see README):
//   conlat-algebra v1
//   universe <n>
//   op <name> <arity> : <n^arity values, whitespace/newline separated>
//   partition <name> = [[0,1],[2,3],...]     # blocks disjoint and covering
struct AlgebraDocument {
    int universe_size = 0;
    std::vector<Operation> operations;
    std::vector<std::pair<std::string, Partition>> partitions;  // document order

    FiniteAlgebra algebra() const { return FiniteAlgebra{universe_size, operations}; }
    std::optional<Partition> partition(const std::string& name) const;

    bool operator==(const AlgebraDocument&) const = default;
};

AlgebraDocument parse_algebra(const std::string& text);
// canonical form: header, universe, ops, partitions with sorted blocks
std::string serialize_algebra(const AlgebraDocument& doc);

// stable FNV-1a content digest, rendered as 16 hex digits
std::string content_digest(const std::string& bytes);

}  // namespace conlat
