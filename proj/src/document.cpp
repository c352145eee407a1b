#include "maxint/document.hpp"

#include <algorithm>

#include "maxint/errors.hpp"

namespace maxint {

Document canonicalize(std::vector<TermRank> raw_terms) {
    for (TermRank t : raw_terms) {
        if (t == 0) throw InvalidTermRank("term rank must be >= 1");
    }
    std::sort(raw_terms.begin(), raw_terms.end());
    raw_terms.erase(std::unique(raw_terms.begin(), raw_terms.end()), raw_terms.end());
    return Document{std::move(raw_terms)};
}

std::size_t intersection_size(const Document& a, const Document& b) {
    std::size_t i = 0, j = 0, count = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        if (a.terms[i] < b.terms[j]) {
            ++i;
        } else if (a.terms[i] > b.terms[j]) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

std::size_t lcp_length(const Document& a, const Document& b) {
    const std::size_t limit = std::min(a.terms.size(), b.terms.size());
    std::size_t p = 0;
    while (p < limit && a.terms[p] == b.terms[p]) ++p;
    return p;
}

std::size_t containment_prefix_len(const Document& query, const Document& d) {
    std::size_t p = 0, j = 0;
    for (; p < query.terms.size(); ++p) {
        const TermRank t = query.terms[p];
        while (j < d.terms.size() && d.terms[j] < t) ++j;
        if (j == d.terms.size() || d.terms[j] != t) break;
        ++j;
    }
    return p;
}

double reverse_order_metric(const Document& a, const Document& b,
                            std::size_t max_cardinality) {
    const std::size_t need = std::max(a.terms.size(), b.terms.size());
    if (max_cardinality == 0 || max_cardinality < need) {
        throw InvalidMaxCardinality("max cardinality smaller than a document");
    }
    const double m2 = 2.0 * static_cast<double>(max_cardinality);
    const double inter = static_cast<double>(intersection_size(a, b));
    return (m2 - 2.0 * inter) / (m2 - inter);
}

int compare_lex(const Document& a, const Document& b) {
    const std::size_t limit = std::min(a.terms.size(), b.terms.size());
    for (std::size_t i = 0; i < limit; ++i) {
        if (a.terms[i] < b.terms[i]) return -1;
        if (a.terms[i] > b.terms[i]) return 1;
    }
    if (a.terms.size() == b.terms.size()) return 0;
    return a.terms.size() < b.terms.size() ? -1 : 1;
}

}  // namespace maxint
