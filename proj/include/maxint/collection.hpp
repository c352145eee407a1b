#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "maxint/document.hpp"

namespace maxint {

enum class ModelKind { zipf, hier, external };

/// Records which model (and parameters) produced a collection.
///   zipf:     n documents over m terms, k = 0
///   hier:     n documents, k levels, m = (2^k - 1) * k (term universe)
///   external: n documents, m = largest rank present (0 if none), k = seed = 0
struct ModelTag {
    ModelKind kind = ModelKind::external;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint32_t k = 0;
    std::uint64_t seed = 0;

    friend bool operator==(const ModelTag&, const ModelTag&) = default;
};

/// An ordered list of canonical documents plus model metadata.
struct Collection {
    std::vector<Document> docs;
    ModelTag tag;
    std::size_t max_cardinality = 0;  // max |d| over docs, 0 if empty

    std::size_t size() const { return docs.size(); }

    friend bool operator==(const Collection&, const Collection&) = default;
};

inline Collection make_collection(std::vector<Document> docs, ModelTag tag) {
    std::size_t max_card = 0;
    for (const auto& d : docs) max_card = std::max(max_card, d.size());
    tag.n = docs.size();
    return Collection{std::move(docs), tag, max_card};
}

}  // namespace maxint
