#include "cupqec/code.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cupqec/rng.hpp"

namespace cupqec {

namespace {

// Column view of one search side: which check rows each qubit flips,
// and which kept classes it pairs with.  Class bits ride in a single
// word, which caps tracked classes at 64.
struct SearchSpace {
    std::vector<std::vector<std::uint32_t>> col;
    std::vector<std::uint64_t> cls;
    std::size_t n = 0;
    std::size_t max_col = 0;
};

SearchSpace make_space(const BitMatrix& checks, const std::vector<const BitVector*>& probes,
                       std::size_t n) {
    if (probes.size() > 64) throw CapacityExceeded("class tracking is capped at 64 kept classes");
    SearchSpace sp;
    sp.n = n;
    sp.col.assign(n, {});
    sp.cls.assign(n, 0);
    for (std::size_t r = 0; r < checks.rows(); ++r)
        for (std::size_t c : checks.row(r).support())
            sp.col[c].push_back(static_cast<std::uint32_t>(r));
    for (const auto& column : sp.col) sp.max_col = std::max(sp.max_col, column.size());
    for (std::size_t i = 0; i < probes.size(); ++i)
        for (std::size_t c : probes[i]->support()) sp.cls[c] |= std::uint64_t{1} << i;
    return sp;
}

// Depth-first growth of a support of fixed weight.  The check syndrome
// must close to zero and the class word must hit the target; target 0
// stands for "any nonzero combination".
struct WeightSearch {
    const SearchSpace& sp;
    std::uint64_t target;
    std::size_t& budget;
    std::vector<char> syn;
    std::size_t syn_weight = 0;
    std::uint64_t acc = 0;
    bool aborted = false;
    bool found = false;

    WeightSearch(const SearchSpace& s, std::uint64_t t, std::size_t& b)
        : sp(s), target(t), budget(b) {
        std::size_t rows = 0;
        for (const auto& column : sp.col)
            for (std::uint32_t r : column) rows = std::max<std::size_t>(rows, r + 1);
        syn.assign(rows, 0);
    }

    bool class_ok() const { return target == 0 ? acc != 0 : acc == target; }

    void toggle(std::size_t j) {
        for (std::uint32_t r : sp.col[j]) {
            syn[r] ^= 1;
            syn_weight += syn[r] ? 1 : std::size_t(-1);
        }
        acc ^= sp.cls[j];
    }

    void dfs(std::size_t start, std::size_t remaining) {
        if (remaining == 0) {
            if (syn_weight == 0 && class_ok()) found = true;
            return;
        }
        if (syn_weight > remaining * sp.max_col) return;
        for (std::size_t j = start; j + remaining <= sp.n; ++j) {
            if (budget == 0) {
                aborted = true;
                return;
            }
            --budget;
            toggle(j);
            dfs(j + 1, remaining - 1);
            toggle(j);
            if (found || aborted) return;
        }
    }
};

std::size_t weight_of(const BitVector& v) { return v.weight(); }

// Cheapest vector hitting the target made from the class representatives
// alone; the search and the randomized draws can only improve on it.
BitVector rep_combination(const std::vector<const BitVector*>& reps, std::uint64_t target,
                          std::size_t n) {
    BitVector best(n);
    if (target == 0) {
        std::size_t w = SIZE_MAX;
        for (const BitVector* r : reps)
            if (weight_of(*r) < w) {
                w = weight_of(*r);
                best = *r;
            }
        return best;
    }
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (target >> i & 1) best.xor_in(*reps[i]);
    return best;
}

std::uint64_t class_word(const std::vector<const BitVector*>& probes, const BitVector& v) {
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < probes.size(); ++i)
        if (probes[i]->dot(v)) w |= std::uint64_t{1} << i;
    return w;
}

// Randomized information-set pass: re-echelonize the solution space
// under random column orders and keep the lightest row (or row
// correction) that still realizes the target classes.
std::size_t randomized_upper(const BitMatrix& checks, const std::vector<const BitVector*>& probes,
                             const std::vector<const BitVector*>& reps, std::uint64_t target,
                             std::size_t n, std::size_t budget, Rng& rng) {
    BitVector base = rep_combination(reps, target, n);
    std::size_t best = weight_of(base);
    std::vector<BitVector> gens = kernel_basis(checks);
    if (gens.empty()) return best;
    const std::size_t k = gens.size();
    const std::size_t per_draw = k * (n / 64 + 1) * k;
    std::size_t draws = std::clamp<std::size_t>(budget / (per_draw + 1), 4, 1024);
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    for (std::size_t d = 0; d < draws; ++d) {
        for (std::size_t i = n; i > 1; --i)
            std::swap(perm[i - 1], perm[rng.below(i)]);
        BitMatrix g(k, n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t c = 0; c < n; ++c)
                if (gens[i].get(perm[c])) g.set(i, c, true);
        // Plain downward elimination; reduced form buys nothing here.
        std::size_t pivot_row = 0;
        for (std::size_t c = 0; c < n && pivot_row < k; ++c) {
            std::size_t r = pivot_row;
            while (r < k && !g.get(r, c)) ++r;
            if (r == k) continue;
            if (r != pivot_row) g.swap_rows(r, pivot_row);
            for (std::size_t r2 = pivot_row + 1; r2 < k; ++r2)
                if (g.get(r2, c)) g.xor_rows(r2, pivot_row);
            ++pivot_row;
        }
        for (std::size_t i = 0; i < k; ++i) {
            BitVector v(n);
            for (std::size_t c = 0; c < n; ++c)
                if (g.get(i, c)) v.set(perm[c], true);
            const std::uint64_t w = class_word(probes, v);
            if (target == 0 ? w != 0 : w == target) {
                if (weight_of(v) < best) {
                    best = weight_of(v);
                    base = v;
                }
            } else if (w == 0) {
                BitVector shifted = base;
                shifted.xor_in(v);
                if (weight_of(shifted) < best) best = weight_of(shifted);
            }
        }
    }
    return best;
}

struct SideOutcome {
    DistanceBound bound;
    bool exact = true;
};

// One full side: grow weight until a vector is certified minimal or the
// step budget runs out, then fall back to bounds.
SideOutcome side_distance(const BitMatrix& checks, const std::vector<const BitVector*>& probes,
                          const std::vector<const BitVector*>& reps, std::uint64_t target,
                          std::size_t n, std::size_t budget, Rng& rng) {
    SearchSpace sp = make_space(checks, probes, n);
    std::size_t steps = budget;
    for (std::size_t w = 1; w <= n; ++w) {
        WeightSearch search(sp, target, steps);
        search.dfs(0, w);
        if (search.found) return {{false, w, w}, true};
        if (search.aborted) {
            DistanceBound b;
            b.lower = w;
            b.upper = randomized_upper(checks, probes, reps, target, n, budget, rng);
            return {b, false};
        }
    }
    throw Error("distance search exhausted all weights without a logical representative");
}

std::vector<std::size_t> kept_indices(const CssCode& code) {
    if (code.subsystem_mask) return *code.subsystem_mask;
    std::vector<std::size_t> all(code.logical.count());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return all;
}

void gather_probes(const CssCode& code, Side side, std::vector<const BitVector*>& probes,
                   std::vector<const BitVector*>& reps) {
    // Probing the Z side means pairing against kept cocycles; the
    // candidate vectors themselves come from the cycle representatives.
    for (std::size_t i : kept_indices(code)) {
        if (side == Side::z) {
            probes.push_back(&code.logical.cocycles[i]);
            reps.push_back(&code.logical.cycles[i]);
        } else {
            probes.push_back(&code.logical.cycles[i]);
            reps.push_back(&code.logical.cocycles[i]);
        }
    }
}

} // namespace

std::size_t CssCode::max_stabilizer_weight() const {
    std::size_t w = 0;
    for (std::size_t r = 0; r < h_x.rows(); ++r) w = std::max(w, h_x.row(r).weight());
    for (std::size_t r = 0; r < h_z.rows(); ++r) w = std::max(w, h_z.row(r).weight());
    return w;
}

CssCode css_from_complex(const ChainComplex& cc, std::size_t q) {
    const std::size_t n = cc.dimension();
    if (q < 1 || q > n)
        throw DegreeOutOfRange("code degree " + std::to_string(q) + " outside [1, " +
                               std::to_string(n) + "]");
    CssCode code;
    code.degree = q;
    code.n_qubits = cc.dim_chain(q);
    code.h_x = cc.boundary[q];
    code.h_z = q + 1 <= n ? transpose(cc.boundary[q + 1]) : BitMatrix(0, code.n_qubits);
    code.logical = normalize_pairing(homology_basis(cc, q));
    return code;
}

CssCode assemble_code(BitMatrix h_x, BitMatrix h_z, HomologyBasis logical,
                      std::optional<std::vector<std::size_t>> mask) {
    const std::size_t n = h_x.cols();
    if (h_z.cols() != n) throw LengthMismatch("check matrices disagree on qubit count");
    if (h_z.rows() > 0) {
        BitMatrix commute = matmul(h_x, transpose(h_z));
        for (std::size_t r = 0; r < commute.rows(); ++r)
            if (!commute.row(r).is_zero()) throw LengthMismatch("X and Z checks do not commute");
    }
    for (const BitVector& z : logical.cycles) {
        if (z.size() != n) throw LengthMismatch("cycle length != qubit count");
        if (!apply(h_x, z).is_zero()) throw BasisMismatch("cycle fails the X checks");
    }
    for (const BitVector& x : logical.cocycles) {
        if (x.size() != n) throw LengthMismatch("cocycle length != qubit count");
        if (h_z.rows() > 0 && !apply(h_z, x).is_zero())
            throw BasisMismatch("cocycle fails the Z checks");
    }
    if (logical.cycles.size() != logical.cocycles.size())
        throw BasisMismatch("cycle and cocycle counts differ");
    BitMatrix p = pairing_matrix(logical.cycles, logical.cocycles);
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j)
            if (p.get(i, j) != (i == j)) throw BasisMismatch("pairing is not the identity");
    logical.normalized = true;
    CssCode code;
    code.n_qubits = n;
    code.degree = logical.degree;
    code.h_x = std::move(h_x);
    code.h_z = std::move(h_z);
    code.logical = std::move(logical);
    if (mask) {
        for (std::size_t i : *mask)
            if (i >= code.logical.count())
                throw IndexOutOfRange("kept index " + std::to_string(i) + " out of range");
        std::sort(mask->begin(), mask->end());
        mask->erase(std::unique(mask->begin(), mask->end()), mask->end());
        code.subsystem_mask = std::move(mask);
    }
    return code;
}

std::string DistanceBound::text() const {
    if (no_logicals) return "infinity";
    if (exact()) return std::to_string(upper);
    return "[" + std::to_string(lower) + "," + std::to_string(upper) + "]";
}

DistanceReport distance(const CssCode& code, std::size_t budget, std::uint64_t seed) {
    DistanceReport report;
    report.budget = budget;
    report.seed = seed;
    if (code.kept_count() == 0) {
        report.d_z.no_logicals = true;
        report.d_x.no_logicals = true;
        report.method = "exhaustive";
        return report;
    }
    std::vector<const BitVector*> probes_z, reps_z, probes_x, reps_x;
    gather_probes(code, Side::z, probes_z, reps_z);
    gather_probes(code, Side::x, probes_x, reps_x);
    Rng rng_z(seed);
    Rng rng_x(seed ^ 0x9e3779b97f4a7c15ull);
    SideOutcome z = side_distance(code.h_x, probes_z, reps_z, 0, code.n_qubits, budget, rng_z);
    SideOutcome x = side_distance(code.h_z, probes_x, reps_x, 0, code.n_qubits, budget, rng_x);
    report.d_z = z.bound;
    report.d_x = x.bound;
    report.method = z.exact && x.exact ? "exhaustive" : "randomized";
    return report;
}

CssCode subsystem_select(const CssCode& code, const std::vector<std::size_t>& keep) {
    if (!code.logical.normalized)
        throw BasisMismatch("subsystem selection requires a normalized pairing");
    std::vector<std::size_t> mask = keep;
    for (std::size_t i : mask)
        if (i >= code.logical.count())
            throw IndexOutOfRange("kept index " + std::to_string(i) + " out of range");
    std::sort(mask.begin(), mask.end());
    mask.erase(std::unique(mask.begin(), mask.end()), mask.end());
    CssCode out = code;
    out.subsystem_mask = std::move(mask);
    return out;
}

std::vector<DistanceBound> class_weights(const CssCode& code, Side side, std::size_t budget,
                                         std::uint64_t seed) {
    std::vector<const BitVector*> probes, reps;
    gather_probes(code, side, probes, reps);
    const BitMatrix& checks = side == Side::z ? code.h_x : code.h_z;
    std::vector<DistanceBound> out;
    Rng rng(seed ^ (side == Side::z ? 0x5a5a5a5aull : 0xa5a5a5a5ull));
    for (std::size_t i = 0; i < probes.size(); ++i) {
        SideOutcome r = side_distance(checks, probes, reps, std::uint64_t{1} << i,
                                      code.n_qubits, budget, rng);
        out.push_back(r.bound);
    }
    return out;
}

std::string parameters_report(const CssCode& code, std::size_t budget, std::uint64_t seed) {
    DistanceReport d = distance(code, budget, seed);
    std::ostringstream out;
    out << "N=" << code.n_qubits << "\n";
    out << "K=" << code.kept_count() << "\n";
    out << "dZ=" << d.d_z.text() << "\n";
    out << "dX=" << d.d_x.text() << "\n";
    out << "w=" << code.max_stabilizer_weight() << "\n";
    out << "method=" << d.method << "\n";
    out << "seed=" << seed << "\n";
    if (code.kept_count() > 0) {
        std::vector<DistanceBound> wz = class_weights(code, Side::z, budget, seed);
        std::vector<DistanceBound> wx = class_weights(code, Side::x, budget, seed);
        std::vector<std::size_t> kept = code.subsystem_mask
                                            ? *code.subsystem_mask
                                            : std::vector<std::size_t>();
        if (kept.empty() && !code.subsystem_mask) {
            kept.resize(code.logical.count());
            std::iota(kept.begin(), kept.end(), std::size_t{0});
        }
        for (std::size_t i = 0; i < kept.size(); ++i) {
            out << "class Z " << kept[i] << " " << wz[i].text() << "\n";
            out << "class X " << kept[i] << " " << wx[i].text() << "\n";
        }
    }
    return out.str();
}

} // namespace cupqec
