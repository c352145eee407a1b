#include "maxint/hier.hpp"

#include <bit>
#include <cmath>

#include "maxint/errors.hpp"

namespace maxint {

namespace {

// (2^27 - 1) * 27 still fits TermRank; larger k would not.
constexpr std::uint32_t kMaxLevels = 27;

void check_levels(std::uint32_t k) {
    if (k < 2 || k > kMaxLevels) throw Error("hier: k must be in [2, 27]");
}

}  // namespace

std::uint64_t hier_universe_size(std::uint32_t k) {
    check_levels(k);
    return ((std::uint64_t{1} << k) - 1) * k;
}

TermRank hier_term_id(const CellAddress& addr, std::uint32_t k) {
    check_levels(k);
    if (addr.level < 1 || addr.level > k) throw InvalidCell("level out of range");
    if (addr.cell < 1 || addr.cell > (std::uint64_t{1} << (addr.level - 1))) {
        throw InvalidCell("cell out of range for level");
    }
    if (addr.slot < 1 || addr.slot > k) throw InvalidCell("slot out of range");
    const std::uint64_t cell_base =
        (std::uint64_t{1} << (addr.level - 1)) - 1 + (addr.cell - 1);
    return static_cast<TermRank>(cell_base * k + addr.slot);
}

CellAddress hier_decode_term(TermRank id, std::uint32_t k) {
    check_levels(k);
    if (id < 1 || id > hier_universe_size(k)) throw InvalidCell("term id out of range");
    const std::uint64_t z = (id - 1) / k;  // 0-based global cell index
    const auto slot = static_cast<std::uint32_t>((id - 1) % k + 1);
    const auto level = static_cast<std::uint32_t>(std::bit_width(z + 1));
    const auto cell = static_cast<std::uint32_t>(z + 2 - (std::uint64_t{1} << (level - 1)));
    return CellAddress{level, cell, slot};
}

Document gen_hier_document(std::uint32_t k, RngState& rng) {
    check_levels(k);
    std::vector<std::uint32_t> cell(k + 1);
    cell[k] = 1 + static_cast<std::uint32_t>(rng.next_below(std::uint64_t{1} << (k - 1)));
    for (std::uint32_t l = k; l >= 2; --l) cell[l - 1] = (cell[l] + 1) / 2;

    std::vector<TermRank> terms;
    terms.reserve(k);
    for (std::uint32_t l = 1; l <= k; ++l) {
        const auto slot = 1 + static_cast<std::uint32_t>(rng.next_below(k));
        terms.push_back(hier_term_id(CellAddress{l, cell[l], slot}, k));
    }
    return Document{std::move(terms)};  // ascending: ids are level-major
}

Collection gen_hier_collection(const HierParams& p) {
    check_levels(p.k);
    const std::uint64_t n = p.n == 0 ? (std::uint64_t{1} << p.k) : p.n;
    std::vector<Document> docs;
    docs.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        RngState rng = RngState::derive(p.seed, i);
        docs.push_back(gen_hier_document(p.k, rng));
    }
    return make_collection(std::move(docs),
                           ModelTag{ModelKind::hier, n, hier_universe_size(p.k), p.k, p.seed});
}

bool is_cell_path_document(const Document& d, std::uint32_t k) {
    check_levels(k);
    if (d.size() != k) return false;
    std::uint32_t parent_cell = 0;
    for (std::uint32_t l = 1; l <= k; ++l) {
        const TermRank id = d.terms[l - 1];
        if (id < 1 || id > hier_universe_size(k)) return false;
        const CellAddress addr = hier_decode_term(id, k);
        if (addr.level != l) return false;
        if (l > 1 && (addr.cell + 1) / 2 != parent_cell) return false;
        parent_cell = addr.cell;
    }
    return true;
}

std::pair<double, double> hier_matching_levels(std::uint32_t k) {
    if (k < 2) throw Error("matching levels need k >= 2");
    const double log2k = std::log2(static_cast<double>(k));
    const double kd = static_cast<double>(k);
    return {kd / (1.0 + log2k), kd / log2k};
}

double hier_zipf_law_product(std::uint32_t level, std::uint32_t k) {
    check_levels(k);
    if (level < 1 || level > k) throw InvalidCell("level out of range");
    const double half_cells = std::ldexp(1.0, static_cast<int>(level) - 1);  // 2^{i-1}
    return (1.5 * half_cells - 1.0) / half_cells;
}

double hier_prefix_match_bound(std::uint32_t k, double gamma) {
    return 1.0 - std::exp2(-std::pow(2.0 * k, gamma));
}

double hier_any_match_bound(std::uint32_t k, double gamma) {
    return 2.0 / std::pow(static_cast<double>(k), gamma - 1.0);
}

}  // namespace maxint
