#pragma once

#include <cstdint>
#include <utility>

#include "maxint/collection.hpp"
#include "maxint/document.hpp"
#include "maxint/rng.hpp"

namespace maxint {

/// Hierarchical scheme: a k-level table of cells, 2^{i-1} cells on level i,
/// k terms per cell. A document marks a root-to-leaf cell path and picks one
/// uniform term per marked cell.
struct HierParams {
    std::uint32_t k = 0;   // levels; supported range [2, 27]
    std::uint64_t n = 0;   // number of documents; 0 means the default 2^k
    std::uint64_t seed = 0;
};

/// Position of one term: level in [1, k], cell in [1, 2^{level-1}],
/// slot in [1, k] within the cell.
struct CellAddress {
    std::uint32_t level = 0;
    std::uint32_t cell = 0;
    std::uint32_t slot = 0;

    friend bool operator==(const CellAddress&, const CellAddress&) = default;
};

/// (2^k - 1) * k, the number of terms in the scheme.
std::uint64_t hier_universe_size(std::uint32_t k);

/// Global term id of an address:
///   id = (2^{level-1} - 1 + (cell - 1)) * k + slot.
/// Bijective onto [1, (2^k - 1) * k]; ids increase with level, then cell,
/// then slot, so ascending term order equals level order and groups
/// documents by cell path. Throws InvalidCell on out-of-range addresses.
TermRank hier_term_id(const CellAddress& addr, std::uint32_t k);

/// Inverse of hier_term_id. Throws InvalidCell for ids outside the universe.
CellAddress hier_decode_term(TermRank id, std::uint32_t k);

/// One hierarchical document: uniform leaf cell on level k, the unique cell
/// path above it, one uniform slot per level. Exactly k terms, one per
/// level. Randomness order: leaf cell first, then slots for levels 1..k.
Document gen_hier_document(std::uint32_t k, RngState& rng);

/// n i.i.d. hierarchical documents (n = 0 uses the default 2^k); document i
/// draws from stream_seed(seed, i).
Collection gen_hier_collection(const HierParams& p);

/// True iff d consists of exactly one term per level whose cells form a
/// valid root-to-leaf path (parent rule ceil(j/2)).
bool is_cell_path_document(const Document& d, std::uint32_t k);

/// Matching levels (q, q') = (k / (1 + log2 k), k / log2 k); q < q'.
std::pair<double, double> hier_matching_levels(std::uint32_t k);

/// Frequency-times-rank product of a level, (3/2 * 2^{i-1} - 1) / 2^{i-1};
/// lies in [0.5, 1.5) for every level.
double hier_zipf_law_product(std::uint32_t level, std::uint32_t k);

/// Theorem bounds for the hierarchical scheme, valid for 2 <= gamma < q:
/// P(prefix match of length floor(q - gamma)) > 1 - 2^{-(2k)^gamma} and
/// P(any match of at least q' + gamma terms) < 2 / k^{gamma-1}.
double hier_prefix_match_bound(std::uint32_t k, double gamma);
double hier_any_match_bound(std::uint32_t k, double gamma);

}  // namespace maxint
