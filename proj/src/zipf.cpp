#include "maxint/zipf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "maxint/errors.hpp"

namespace maxint {

namespace {

void check_universe(std::uint64_t m) {
    if (m < 1) throw Error("zipf: m must be >= 1");
    if (m > std::numeric_limits<TermRank>::max()) {
        throw Error("zipf: m exceeds the supported term-rank range");
    }
}

/// Inclusive rank bounds [lo, hi] of exponential group i (1-based).
std::pair<std::uint64_t, std::uint64_t> group_bounds(std::uint32_t i) {
    const std::uint64_t lo =
        i == 1 ? 1 : static_cast<std::uint64_t>(std::floor(std::exp(double(i - 1)))) + 1;
    const std::uint64_t hi = static_cast<std::uint64_t>(std::floor(std::exp(double(i))));
    return {lo, hi};
}

std::uint32_t regular_group_count(std::uint64_t m) {
    return static_cast<std::uint32_t>(std::floor(std::log(static_cast<double>(m))));
}

}  // namespace

ZipfThresholdParams::ZipfThresholdParams(double delta_, double epsilon_)
    : delta(delta_), epsilon(epsilon_) {
    if (!(delta > 0.0 && delta < 1.0)) throw Error("delta must be in (0, 1)");
    if (!(epsilon > 0.0)) throw Error("epsilon must be positive");
}

double ZipfThresholdParams::gamma(std::uint64_t n) const {
    return 2.0 + delta * std::sqrt(2.0 * std::log(static_cast<double>(n)));
}

double ZipfThresholdParams::chernoff_c() const {
    return std::exp(-delta * delta / 2.0);
}

double harmonic_number(std::uint64_t m) {
    double h = 0.0;
    for (std::uint64_t i = m; i >= 1; --i) h += 1.0 / static_cast<double>(i);
    return h;
}

double zipf_matching_level(std::uint64_t n) {
    if (n < 2) throw Error("matching level needs n >= 2");
    return std::sqrt(2.0 * std::log(static_cast<double>(n)));
}

double lemma1_generic_bound(double delta, std::uint64_t n) {
    const double c = std::exp(-delta * delta / 2.0);
    const double expo = 1.4 * delta * std::sqrt(std::log(static_cast<double>(n)));
    return 1.0 - std::pow(c, expo) / (1.0 - c);
}

double zipf_prefix_match_bound(double delta, std::uint64_t n) {
    const double c = std::exp(-delta * delta / 2.0);
    const double expo = delta * std::sqrt(std::log(static_cast<double>(n)));
    return 1.0 - std::pow(c, expo) / (1.0 - c);
}

std::optional<TermRank> zipf_next_included(TermRank current, std::uint64_t m,
                                           RngState& rng) {
    check_universe(m);
    if (current == 0) return TermRank{1};
    // P(next > j | at i) = i/j, so the next rank is the smallest integer j
    // with i/j < U, i.e. floor(i/U) + 1.
    const double u = rng.next_unit_open();
    const double x = static_cast<double>(current) / u;
    if (x >= static_cast<double>(m)) return std::nullopt;
    return static_cast<TermRank>(x) + 1;
}

Document gen_zipf_document(std::uint64_t m, RngState& rng) {
    check_universe(m);
    std::vector<TermRank> terms;
    TermRank cur = 0;
    for (;;) {
        const auto next = zipf_next_included(cur, m, rng);
        if (!next) break;
        terms.push_back(*next);
        cur = *next;
        if (cur >= m) break;
    }
    return Document{std::move(terms)};
}

Collection gen_zipf_collection(const ZipfParams& p) {
    if (p.n < 1) throw Error("zipf: n must be >= 1");
    check_universe(p.m);
    std::vector<Document> docs;
    docs.reserve(p.n);
    for (std::uint64_t i = 0; i < p.n; ++i) {
        RngState rng = RngState::derive(p.seed, i);
        docs.push_back(gen_zipf_document(p.m, rng));
    }
    return make_collection(std::move(docs),
                           ModelTag{ModelKind::zipf, p.n, p.m, 0, p.seed});
}

bool is_regular(const Document& d, std::uint64_t m) {
    check_universe(m);
    const std::uint32_t groups = regular_group_count(m);
    if (d.size() != groups) return false;
    std::size_t pos = 0;
    for (std::uint32_t i = 1; i <= groups; ++i) {
        const auto hi = group_bounds(i).second;
        std::size_t in_group = 0;
        while (pos < d.terms.size() && d.terms[pos] <= hi) {
            ++in_group;
            ++pos;
        }
        if (in_group != 1) return false;
    }
    return pos == d.terms.size();
}

Document gen_regular_document(std::uint64_t m, RngState& rng) {
    if (m < 3) throw Error("regular documents need m >= 3");
    check_universe(m);
    const std::uint32_t groups = regular_group_count(m);
    std::vector<TermRank> terms;
    terms.reserve(groups);
    for (std::uint32_t i = 1; i <= groups; ++i) {
        const auto [lo, hi] = group_bounds(i);
        terms.push_back(static_cast<TermRank>(lo + rng.next_below(hi - lo + 1)));
    }
    return Document{std::move(terms)};
}

bool is_delta_n_generic(const Document& d, double delta, std::uint64_t n) {
    if (!(delta > 0.0 && delta < 1.0)) throw Error("delta must be in (0, 1)");
    if (n < 2) throw Error("genericity needs n >= 2");
    const double s = std::sqrt(2.0 * std::log(static_cast<double>(n)));
    const auto i_lo = static_cast<std::uint32_t>(std::ceil(delta * s));
    const auto i_hi = static_cast<std::uint32_t>(std::ceil(s));
    for (std::uint32_t i = std::max<std::uint32_t>(i_lo, 1); i <= i_hi; ++i) {
        const auto cutoff =
            static_cast<TermRank>(std::floor(std::exp(static_cast<double>(i))));
        const auto count = static_cast<double>(
            std::upper_bound(d.terms.begin(), d.terms.end(), cutoff) - d.terms.begin());
        if (count < (1.0 - delta) * static_cast<double>(i)) return false;
    }
    return true;
}

Document extend_with_missing_prefix_terms(const Document& d, std::size_t count) {
    std::vector<TermRank> out;
    out.reserve(d.size() + count);
    std::size_t di = 0, added = 0;
    TermRank r = 1;
    while (added < count) {
        if (di < d.terms.size() && d.terms[di] == r) {
            ++di;
        } else {
            ++added;
        }
        out.push_back(r);
        ++r;
    }
    out.insert(out.end(), d.terms.begin() + di, d.terms.end());
    return Document{std::move(out)};
}

}  // namespace maxint
