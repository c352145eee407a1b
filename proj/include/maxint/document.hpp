#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace maxint {

/// 1-based frequency rank of a term; rank 1 is the most frequent term.
using TermRank = std::uint32_t;

/// A document is a strictly increasing sequence of term ranks (a set of
/// terms ordered by frequency rank). All operations below require this
/// canonical form; build one from raw input with canonicalize().
struct Document {
    std::vector<TermRank> terms;

    std::size_t size() const { return terms.size(); }
    bool empty() const { return terms.empty(); }

    friend bool operator==(const Document&, const Document&) = default;
};

/// Sorts ascending and drops duplicates. Throws InvalidTermRank if any
/// value is zero (ranks are 1-based).
Document canonicalize(std::vector<TermRank> raw_terms);

/// |a ∩ b| by linear merge of the two sorted sequences.
std::size_t intersection_size(const Document& a, const Document& b);

/// Length of the longest common prefix of the two sorted sequences.
std::size_t lcp_length(const Document& a, const Document& b);

/// Largest p such that the first p terms of `query` are all members of `d`
/// (membership anywhere in d, not necessarily a prefix of d).
std::size_t containment_prefix_len(const Document& query, const Document& d);

/// Distance (2M - 2|a∩b|) / (2M - |a∩b|) in [0, 1]; decreasing in the
/// intersection size, so nearest-by-intersection equals nearest-by-distance.
/// Throws InvalidMaxCardinality if max_cardinality < max(|a|, |b|) or is 0.
double reverse_order_metric(const Document& a, const Document& b,
                            std::size_t max_cardinality);

/// Lexicographic comparison of the sorted rank sequences: negative if a < b,
/// 0 if equal, positive if a > b. A proper prefix precedes its extensions.
int compare_lex(const Document& a, const Document& b);

}  // namespace maxint
