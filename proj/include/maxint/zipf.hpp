#pragma once

#include <cstdint>
#include <optional>

#include "maxint/collection.hpp"
#include "maxint/document.hpp"
#include "maxint/rng.hpp"

namespace maxint {

/// Zipf model: each document independently contains term t_i with
/// probability 1/i, over a universe of m terms.
struct ZipfParams {
    std::uint64_t n = 0;  // number of documents
    std::uint64_t m = 0;  // number of terms
    std::uint64_t seed = 0;
};

/// Parameters of the Zipf-model threshold statements. gamma depends on the
/// collection size, so it is exposed as a function of n.
struct ZipfThresholdParams {
    double delta;
    double epsilon;

    ZipfThresholdParams(double delta, double epsilon);

    /// 2 + delta * sqrt(2 ln n)
    double gamma(std::uint64_t n) const;
    /// e^{-delta^2 / 2}, in (e^{-1/2}, 1)
    double chernoff_c() const;
};

/// H_m = sum_{i=1..m} 1/i, the exact expected Zipf document size.
double harmonic_number(std::uint64_t m);

/// Matching level q_n = sqrt(2 ln n) of the Zipf model.
double zipf_matching_level(std::uint64_t n);

/// Analytic lower bound on P(document is delta-n-generic):
/// 1 - c^{1.4 delta sqrt(ln n)} / (1 - c). May be negative (vacuous) at
/// small n; reported as-is.
double lemma1_generic_bound(double delta, std::uint64_t n);

/// Analytic lower bound on the prefix-match probability in the Zipf model:
/// 1 - c^{delta sqrt(ln n)} / (1 - c). May be vacuous at small n.
double zipf_prefix_match_bound(double delta, std::uint64_t n);

/// Skip sampler for the independent Bernoulli inclusions P(t_j) = 1/j.
/// Given the last included rank `current` (0 if none yet), returns the next
/// included rank, or nullopt once it falls beyond m. Uses the closed-form
/// skip law P(next > j | at i) = i/j; current = 0 returns 1 (t_1 has
/// probability 1) without consuming randomness.
std::optional<TermRank> zipf_next_included(TermRank current, std::uint64_t m,
                                           RngState& rng);

/// One Zipf document over ranks [1, m]; always contains rank 1; expected
/// size is harmonic_number(m).
Document gen_zipf_document(std::uint64_t m, RngState& rng);

/// n i.i.d. Zipf documents; document i draws from stream_seed(seed, i), so
/// the result is deterministic in the parameters alone.
Collection gen_zipf_collection(const ZipfParams& p);

/// Regular document predicate: exactly floor(ln m) terms, one in each
/// exponential rank group P_i = [floor(e^{i-1})+1, floor(e^i)] (P_1 starts
/// at rank 1).
bool is_regular(const Document& d, std::uint64_t m);

/// Uniform regular document: one uniformly chosen term per group. m >= 3.
Document gen_regular_document(std::uint64_t m, RngState& rng);

/// delta-n-generic predicate: for every integer i in
/// [ceil(delta sqrt(2 ln n)), ceil(sqrt(2 ln n))], the document holds at
/// least (1 - delta) * i terms of rank <= e^i. The upper end of the range
/// is the bound the matching-level argument consumes; an unbounded i would
/// fail for every finite document.
bool is_delta_n_generic(const Document& d, double delta, std::uint64_t n);

/// d plus the `count` smallest ranks not already present.
Document extend_with_missing_prefix_terms(const Document& d, std::size_t count);

}  // namespace maxint
