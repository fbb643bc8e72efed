#include "cupqec/product.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

namespace cupqec {

namespace {

// Lift of one factor cell pair: every unit staircase through the grid of
// the two vertex tuples, accumulated mod 2.
void add_staircase_lifts(const SimplicialComplex& a, const SimplicialComplex& b,
                         const SimplexList& target, std::size_t p, std::size_t r,
                         const std::uint32_t* sa, const std::uint32_t* sb, BitVector& out) {
    const std::size_t vb = b.num_vertices();
    std::vector<char> pattern(p + r);
    std::fill(pattern.begin(), pattern.begin() + p, 1);
    std::fill(pattern.begin() + p, pattern.end(), 0);
    std::vector<std::uint32_t> tuple(p + r + 1);
    do {
        std::size_t x = 0, y = 0;
        tuple[0] = sa[0] * vb + sb[0];
        for (std::size_t s = 0; s < p + r; ++s) {
            if (pattern[s]) ++x; else ++y;
            tuple[s + 1] = sa[x] * vb + sb[y];
        }
        auto idx = target.find(tuple.data());
        if (!idx) throw Error("staircase lift missing from the product complex");
        out.flip(*idx);
    } while (std::prev_permutation(pattern.begin(), pattern.end()));
}

BitVector ez_cross(const SimplicialComplex& a, const SimplicialComplex& b,
                   const SimplicialComplex& ab, std::size_t p, std::size_t r,
                   const BitVector& za, const BitVector& zb) {
    const SimplexList& target = ab.cells(p + r);
    BitVector out(target.size());
    for (std::size_t ca : za.support())
        for (std::size_t cb : zb.support())
            add_staircase_lifts(a, b, target, p, r, a.cells(p).tuple(ca),
                                b.cells(r).tuple(cb), out);
    return out;
}

// Dual cross: a product cell supports the cochain when its front
// a-projection and back b-projection are both nondegenerate and both
// factor cochains fire on them.
BitVector aw_cross(const SimplicialComplex& a, const SimplicialComplex& b,
                   const SimplicialComplex& ab, std::size_t p, std::size_t r,
                   const BitVector& xa, const BitVector& xb) {
    const SimplexList& cells = ab.cells(p + r);
    const std::size_t vb = b.num_vertices();
    BitVector out(cells.size());
    std::vector<std::uint32_t> fr(p + 1), bk(r + 1);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::uint32_t* u = cells.tuple(i);
        bool ok = true;
        for (std::size_t s = 0; s <= p && ok; ++s) {
            fr[s] = u[s] / vb;
            if (s > 0 && fr[s] <= fr[s - 1]) ok = false;
        }
        for (std::size_t s = 0; s <= r && ok; ++s) {
            bk[s] = u[p + s] % vb;
            if (s > 0 && bk[s] <= bk[s - 1]) ok = false;
        }
        if (!ok) continue;
        auto ia = a.cells(p).find(fr.data());
        auto ib = b.cells(r).find(bk.data());
        if (!ia || !ib) throw Error("projected face missing from a factor complex");
        if (xa.get(*ia) && xb.get(*ib)) out.set(i, true);
    }
    return out;
}

bool cycle_closes(const SimplicialComplex& sc, std::size_t q, const BitVector& v) {
    if (q == 0) return true;
    std::vector<char> acc(sc.num_cells(q - 1), 0);
    const IncidenceCsr& fc = sc.faces(q);
    for (std::size_t c : v.support()) {
        auto [first, last] = fc.range(c);
        for (const std::uint32_t* f = first; f != last; ++f) acc[*f] ^= 1;
    }
    return std::all_of(acc.begin(), acc.end(), [](char x) { return x == 0; });
}

Family classify(std::size_t l, std::size_t m, std::size_t t) {
    if (t == 0 && l >= 1 && m >= 1) return Family::alpha;
    if (l == 0 && m >= 1 && t >= 1) return Family::beta;
    if (m == 0 && l >= 1 && t >= 1) return Family::gamma;
    return Family::residual;
}

std::size_t betti_at(const std::vector<HomologyBasis>& fb, std::size_t d) {
    return d < fb.size() ? fb[d].count() : 0;
}

// Orientation slot for a family triple, lexicographic over permutations
// of (alpha, beta, gamma); SIZE_MAX when the triple is not a permutation.
std::size_t orientation_index(Family f1, Family f2, Family f3) {
    static constexpr std::array<std::array<Family, 3>, 6> perms = {{
        {Family::alpha, Family::beta, Family::gamma},
        {Family::alpha, Family::gamma, Family::beta},
        {Family::beta, Family::alpha, Family::gamma},
        {Family::beta, Family::gamma, Family::alpha},
        {Family::gamma, Family::alpha, Family::beta},
        {Family::gamma, Family::beta, Family::alpha},
    }};
    for (std::size_t i = 0; i < perms.size(); ++i)
        if (perms[i][0] == f1 && perms[i][1] == f2 && perms[i][2] == f3) return i;
    return SIZE_MAX;
}

} // namespace

std::vector<HomologyBasis> dense_bases(const SimplicialComplex& sc) {
    ChainComplex cc = chain_complex_of(sc);
    std::vector<HomologyBasis> out;
    out.reserve(sc.dimension() + 1);
    for (std::size_t q = 0; q <= sc.dimension(); ++q)
        out.push_back(normalize_pairing(homology_basis(cc, q)));
    return out;
}

std::vector<HomologyBasis> cross_bases(const SimplicialComplex& a, const SimplicialComplex& b,
                                       const SimplicialComplex& ab,
                                       const std::vector<HomologyBasis>& basis_a,
                                       const std::vector<HomologyBasis>& basis_b,
                                       std::vector<std::vector<CrossOrigin>>* origins) {
    const std::size_t da = a.dimension(), db = b.dimension(), dn = ab.dimension();
    if (dn != da + db) throw DegreeMismatch("product dimension is not the sum of factor dimensions");
    for (const auto& hb : basis_a)
        if (hb.count() > 0 && !hb.normalized)
            throw BasisMismatch("first factor basis is not pairing-normalized");
    for (const auto& hb : basis_b)
        if (hb.count() > 0 && !hb.normalized)
            throw BasisMismatch("second factor basis is not pairing-normalized");

    // Structural re-checks of the lifted representatives are affordable
    // only while the product is small; the pairing identity below and
    // the downstream cross-validations cover the large cases.
    const bool structural = ab.total_cells() <= (std::size_t{1} << 20);

    std::vector<HomologyBasis> out(dn + 1);
    if (origins) origins->assign(dn + 1, {});
    for (std::size_t q = 0; q <= dn; ++q) {
        HomologyBasis basis;
        basis.degree = q;
        const std::size_t p_lo = q > db ? q - db : 0;
        const std::size_t p_hi = std::min(q, da);
        for (std::size_t p = p_lo; p <= p_hi; ++p) {
            const std::size_t r = q - p;
            for (std::size_t ia = 0; ia < betti_at(basis_a, p); ++ia) {
                for (std::size_t ib = 0; ib < betti_at(basis_b, r); ++ib) {
                    basis.cycles.push_back(
                        ez_cross(a, b, ab, p, r, basis_a[p].cycles[ia], basis_b[r].cycles[ib]));
                    basis.cocycles.push_back(
                        aw_cross(a, b, ab, p, r, basis_a[p].cocycles[ia], basis_b[r].cocycles[ib]));
                    if (origins) (*origins)[q].push_back({p, ia, r, ib});
                }
            }
        }
        BitMatrix pm = pairing_matrix(basis.cycles, basis.cocycles);
        for (std::size_t i = 0; i < pm.rows(); ++i)
            for (std::size_t j = 0; j < pm.cols(); ++j)
                if (pm.get(i, j) != (i == j))
                    throw BasisMismatch("crossed representatives lost the conjugate pairing");
        basis.normalized = true;
        if (structural) {
            for (const BitVector& z : basis.cycles)
                if (!cycle_closes(ab, q, z)) throw Error("crossed cycle has a boundary");
            for (const BitVector& x : basis.cocycles)
                if (!is_cocycle(ab, Cochain{q, x})) throw Error("crossed cocycle has a coboundary");
        }
        out[q] = std::move(basis);
    }
    return out;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::alpha: return "alpha";
        case Family::beta: return "beta";
        case Family::gamma: return "gamma";
        case Family::residual: return "residual";
    }
    return "residual";
}

std::vector<KunnethLabel> kunneth_families(const std::array<std::vector<HomologyBasis>, 3>& fb,
                                           std::size_t q_tilde) {
    std::size_t total_dim = 0;
    for (const auto& bases : fb)
        total_dim += bases.empty() ? 0 : bases.size() - 1;
    if (q_tilde > total_dim)
        throw DegreeOutOfRange("label degree " + std::to_string(q_tilde) +
                               " exceeds the product dimension");
    std::vector<KunnethLabel> canonical;
    std::size_t position = 0;
    for (std::size_t l = 0; l <= q_tilde; ++l) {
        for (std::size_t m = 0; m + l <= q_tilde; ++m) {
            const std::size_t t = q_tilde - l - m;
            for (std::size_t ia = 0; ia < betti_at(fb[0], l); ++ia)
                for (std::size_t ib = 0; ib < betti_at(fb[1], m); ++ib)
                    for (std::size_t ic = 0; ic < betti_at(fb[2], t); ++ic)
                        canonical.push_back(
                            {classify(l, m, t), {l, m, t}, {ia, ib, ic}, position++});
        }
    }
    std::vector<KunnethLabel> grouped;
    grouped.reserve(canonical.size());
    for (Family f : {Family::alpha, Family::beta, Family::gamma, Family::residual})
        for (const KunnethLabel& lab : canonical)
            if (lab.family == f) grouped.push_back(lab);
    return grouped;
}

SimplicialComplex triple_product(const SimplicialComplex& a, const SimplicialComplex& b,
                                 const SimplicialComplex& c) {
    for (const SimplicialComplex* f : {&a, &b, &c})
        if (!f->closed_manifold())
            throw NotClosedManifold("triple products take closed manifolds only");
    return ordered_product(ordered_product(a, b), c);
}

TripleProduct make_triple_product(const SimplicialComplex& a, const SimplicialComplex& b,
                                  const SimplicialComplex& c) {
    for (const SimplicialComplex* f : {&a, &b, &c})
        if (!f->closed_manifold())
            throw NotClosedManifold("triple products take closed manifolds only");
    TripleProduct tp;
    tp.factors = {a, b, c};
    for (std::size_t i = 0; i < 3; ++i) tp.factor_bases[i] = dense_bases(tp.factors[i]);
    tp.pair_ab = ordered_product(a, b);
    std::vector<std::vector<CrossOrigin>> orig_ab;
    auto bases_ab = cross_bases(a, b, tp.pair_ab, tp.factor_bases[0], tp.factor_bases[1], &orig_ab);
    tp.full = ordered_product(tp.pair_ab, c);
    std::vector<std::vector<CrossOrigin>> orig_full;
    auto bases_full =
        cross_bases(tp.pair_ab, c, tp.full, bases_ab, tp.factor_bases[2], &orig_full);

    // Re-sort each degree into canonical (degrees, indices) order so
    // label positions are a pure function of the factor Betti data.
    const std::size_t dn = tp.full.dimension();
    tp.bases.resize(dn + 1);
    tp.labels.resize(dn + 1);
    for (std::size_t q = 0; q <= dn; ++q) {
        struct Key {
            std::array<std::size_t, 6> k;
            std::size_t pos;
        };
        std::vector<Key> keys;
        for (std::size_t j = 0; j < bases_full[q].count(); ++j) {
            const CrossOrigin& o2 = orig_full[q][j];
            const CrossOrigin& o1 = orig_ab[o2.deg_a][o2.idx_a];
            keys.push_back(
                {{o1.deg_a, o1.deg_b, o2.deg_b, o1.idx_a, o1.idx_b, o2.idx_b}, j});
        }
        std::sort(keys.begin(), keys.end(),
                  [](const Key& x, const Key& y) { return x.k < y.k; });
        HomologyBasis sorted;
        sorted.degree = q;
        sorted.normalized = true;
        for (std::size_t n = 0; n < keys.size(); ++n) {
            const Key& key = keys[n];
            sorted.cycles.push_back(std::move(bases_full[q].cycles[key.pos]));
            sorted.cocycles.push_back(std::move(bases_full[q].cocycles[key.pos]));
            tp.labels[q].push_back({classify(key.k[0], key.k[1], key.k[2]),
                                    {key.k[0], key.k[1], key.k[2]},
                                    {key.k[3], key.k[4], key.k[5]},
                                    n});
        }
        tp.bases[q] = std::move(sorted);
    }
    return tp;
}

CczCounts ccz_count(const LogicalCczTensor& t, const std::vector<KunnethLabel>& labels,
                    const TripleProduct& tp) {
    const std::size_t k = labels.size();
    if (t.k1() != k || t.k2() != k || t.k3() != k)
        throw LabelMismatch("tensor axes do not match the label set");
    std::vector<const KunnethLabel*> by_class(k, nullptr);
    for (const KunnethLabel& lab : labels) {
        if (lab.class_index >= k || by_class[lab.class_index])
            throw LabelMismatch("label class indices are not a permutation");
        by_class[lab.class_index] = &lab;
    }
    for (const KunnethLabel* lab : by_class) {
        for (std::size_t f = 0; f < 3; ++f)
            if (lab->indices[f] >= betti_at(tp.factor_bases[f], lab->degrees[f]))
                throw LabelMismatch("label points at a missing factor class");
    }

    CczCounts counts;
    for (std::size_t i = 0; i < k; ++i) {
        const KunnethLabel& la = *by_class[i];
        for (std::size_t j = 0; j < k; ++j) {
            const KunnethLabel& lb = *by_class[j];
            for (std::size_t c = 0; c < k; ++c) {
                const KunnethLabel& lc = *by_class[c];
                bool factored = true;
                for (std::size_t f = 0; f < 3 && factored; ++f) {
                    const SimplicialComplex& fac = tp.factors[f];
                    if (la.degrees[f] + lb.degrees[f] + lc.degrees[f] != fac.dimension()) {
                        factored = false;
                        break;
                    }
                    Cochain xa{la.degrees[f],
                               tp.factor_bases[f][la.degrees[f]].cocycles[la.indices[f]]};
                    Cochain xb{lb.degrees[f],
                               tp.factor_bases[f][lb.degrees[f]].cocycles[lb.indices[f]]};
                    Cochain xc{lc.degrees[f],
                               tp.factor_bases[f][lc.degrees[f]].cocycles[lc.indices[f]]};
                    factored = triple_cup_sum(fac, xa, xb, xc);
                }
                if (factored != t.get(i, j, c))
                    throw Error("factorized and circuit tensor entries disagree");
                if (!factored) continue;
                ++counts.support;
                const std::size_t o = orientation_index(la.family, lb.family, lc.family);
                if (o == SIZE_MAX) {
                    ++counts.other_support;
                } else {
                    ++counts.by_orientation[o];
                    ++counts.family_total;
                }
            }
        }
    }
    return counts;
}

void write_families(std::ostream& out, const std::vector<KunnethLabel>& labels) {
    for (const KunnethLabel& lab : labels) {
        out << family_name(lab.family);
        for (std::size_t d : lab.degrees) out << " " << d;
        for (std::size_t i : lab.indices) out << " " << i;
        out << " " << lab.class_index << "\n";
    }
}

std::vector<KunnethLabel> read_families(std::istream& in) {
    std::vector<KunnethLabel> labels;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string name;
        KunnethLabel lab;
        if (!(ls >> name >> lab.degrees[0] >> lab.degrees[1] >> lab.degrees[2] >>
              lab.indices[0] >> lab.indices[1] >> lab.indices[2] >> lab.class_index))
            throw ParseError("families: bad line '" + line + "'");
        std::string extra;
        if (ls >> extra) throw ParseError("families: trailing token '" + extra + "'");
        if (name == "alpha") lab.family = Family::alpha;
        else if (name == "beta") lab.family = Family::beta;
        else if (name == "gamma") lab.family = Family::gamma;
        else if (name == "residual") lab.family = Family::residual;
        else throw ParseError("families: unknown family '" + name + "'");
        labels.push_back(lab);
    }
    return labels;
}

} // namespace cupqec
