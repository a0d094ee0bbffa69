#include "ratcat/assoc.hpp"

#include <algorithm>
#include <set>

namespace ratcat {

std::vector<Diagonal> polygon_diagonals(long b) {
    long n = b + 1;
    std::vector<Diagonal> out;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 2; v <= n; ++v) {
            if (u == 1 && v == n) continue;  // adjacent around the polygon
            out.push_back(Diagonal{u, v});
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> admissible_set(const CoprimePair& p) {
    if (p.a() >= p.b()) throw std::invalid_argument("admissible_set: requires a < b");
    std::set<long> s;
    for (long i = 1; i < p.a(); ++i) s.insert(i * p.b() / p.a());
    return {s.begin(), s.end()};
}

bool is_admissible(const CoprimePair& p, const Diagonal& d) {
    std::vector<long> s = admissible_set(p);
    long i = d.v - d.u - 1;
    long j = p.b() - 1 - i;
    return std::binary_search(s.begin(), s.end(), i) ||
           std::binary_search(s.begin(), s.end(), j);
}

std::vector<Diagonal> admissible_diagonals(const CoprimePair& p) {
    std::vector<Diagonal> out;
    for (const Diagonal& d : polygon_diagonals(p.b()))
        if (is_admissible(p, d)) out.push_back(d);
    return out;
}

bool noncrossing(const Diagonal& d1, const Diagonal& d2) {
    bool interleave = (d1.u < d2.u && d2.u < d1.v && d1.v < d2.v) ||
                      (d2.u < d1.u && d1.u < d2.v && d2.v < d1.v);
    return !interleave;
}

Diagonal diagonal_of_laser(const DyckPath& d, Point p) {
    Laser l = fire_laser(d, p);
    return Diagonal{static_cast<int>(p.x + 1), static_cast<int>(l.hit_step_right_end.x + 1)};
}

std::vector<Diagonal> facet_diagonals(const DyckPath& d) {
    std::vector<Diagonal> out;
    for (const Point& p : statistics(d).north_bottoms) out.push_back(diagonal_of_laser(d, p));
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t AssComplex::mask_of(const std::vector<Diagonal>& face) const {
    std::uint64_t m = 0;
    for (const Diagonal& d : face) {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), d);
        if (it == vertices.end() || !(*it == d))
            throw std::invalid_argument("AssComplex: diagonal is not a vertex");
        m |= 1ULL << (it - vertices.begin());
    }
    return m;
}

std::vector<Diagonal> AssComplex::face_of(std::uint64_t mask) const {
    std::vector<Diagonal> out;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (mask >> i & 1) out.push_back(vertices[i]);
    return out;
}

namespace {

AssComplex with_facets(const CoprimePair& p, std::vector<std::uint64_t> masks,
                       std::vector<Diagonal> verts) {
    long n = static_cast<long>(verts.size());
    return AssComplex{p, std::move(verts), SimplicialComplex(n, std::move(masks))};
}

}  // namespace

AssComplex build_ass(const CoprimePair& p) {
    if (p.a() >= p.b()) throw std::invalid_argument("build_ass: requires a < b");
    AssComplex out{p, admissible_diagonals(p), SimplicialComplex(0, std::vector<std::uint64_t>{})};
    std::vector<std::uint64_t> masks;
    for_each_path(p, [&](const DyckPath& d) { masks.push_back(out.mask_of(facet_diagonals(d))); });
    return with_facets(p, std::move(masks), std::move(out.vertices));
}

namespace {

// Bron-Kerbosch with pivoting over an adjacency-mask graph.
void max_cliques(std::uint64_t r, std::uint64_t pset, std::uint64_t x,
                 const std::vector<std::uint64_t>& adj, std::vector<std::uint64_t>& out) {
    if (pset == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    std::uint64_t cand = pset | x;
    int pivot = -1, best = -1;
    for (std::uint64_t m = cand; m;) {
        int v = std::countr_zero(m);
        int deg = std::popcount(pset & adj[v]);
        if (deg > best) {
            best = deg;
            pivot = v;
        }
        m &= m - 1;
    }
    std::uint64_t todo = pset & ~adj[pivot];
    while (todo) {
        int v = std::countr_zero(todo);
        std::uint64_t bit = 1ULL << v;
        max_cliques(r | bit, pset & adj[v], x & adj[v], adj, out);
        pset &= ~bit;
        x |= bit;
        todo &= todo - 1;
    }
}

}  // namespace

AssComplex build_ass_hat(const CoprimePair& p) {
    if (p.a() >= p.b()) throw std::invalid_argument("build_ass_hat: requires a < b");
    std::vector<Diagonal> verts = admissible_diagonals(p);
    long n = static_cast<long>(verts.size());
    if (n > SimplicialComplex::max_vertices)
        throw std::invalid_argument("build_ass_hat: too many admissible diagonals");
    std::vector<std::uint64_t> adj(n, 0);
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
            if (noncrossing(verts[i], verts[j])) {
                adj[i] |= 1ULL << j;
                adj[j] |= 1ULL << i;
            }
    std::vector<std::uint64_t> masks;
    if (n == 0)
        masks.push_back(0);
    else
        max_cliques(0, n == 64 ? ~0ULL : (1ULL << n) - 1, 0, adj, masks);
    return with_facets(p, std::move(masks), std::move(verts));
}

ShellingData shelling_order(const CoprimePair& p) {
    ShellingData out{build_ass(p), enumerate_paths(p), {}, {}};
    for (const DyckPath& d : out.paths) {
        out.order.push_back(out.ass.mask_of(facet_diagonals(d)));
        std::vector<Diagonal> valley;
        for (const Point& v : statistics(d).valleys) valley.push_back(diagonal_of_laser(d, v));
        std::sort(valley.begin(), valley.end());
        out.valleys.push_back(out.ass.mask_of(valley));
    }
    return out;
}

namespace {

// Reduced Betti number in degree i, empty-face degree -1 included.
long betti_aug(const SimplicialComplex& k, const std::vector<long>& betti, long i) {
    if (k.dimension() < 0) return i == -1 ? 1 : 0;
    if (i == -1) return 0;
    if (i >= 0 && i <= k.dimension()) return betti[i];
    return 0;
}

std::string pair_str(const CoprimePair& p) {
    return "(" + std::to_string(p.a()) + "," + std::to_string(p.b()) + ")";
}

}  // namespace

IdentityReport check_identities(const CoprimePair& p) {
    IdentityReport rep;
    auto fail = [&](const std::string& what) {
        if (rep.ok) {
            rep.ok = false;
            rep.detail = pair_str(p) + ": " + what;
        }
    };
    AssComplex ass = build_ass(p);
    FHVector fh = f_h_vectors(ass.complex);
    if (fh.dim != p.a() - 2) fail("dimension != a-2");
    for (long i = 1; i <= p.a(); ++i) {
        if (fh.f_at(i - 2) != kirkman(p, i)) fail("f[" + std::to_string(i - 2) + "] != Kirkman");
        if (fh.h_at(i - 2) != narayana(p, i)) fail("h[" + std::to_string(i - 2) + "] != Narayana");
    }
    BigInt chi = reduced_euler(ass.complex);
    BigInt catp = derived_catalan(p);
    if ((chi < 0 ? -chi : chi) != catp) fail("|euler| != derived Catalan");
    std::vector<long> betti = betti_numbers(ass.complex);
    for (long i = -1; i <= ass.complex.dimension(); ++i) {
        long expect = i == p.a() - 2 ? static_cast<long>(catp) : 0;
        if (betti_aug(ass.complex, betti, i) != expect)
            fail("Betti[" + std::to_string(i) + "] != " + std::to_string(expect));
    }
    return rep;
}

bool ass_equals_ass_hat(const CoprimePair& p) {
    AssComplex ass = build_ass(p), hat = build_ass_hat(p);
    return ass.vertices == hat.vertices &&
           ass.complex.facet_masks() == hat.complex.facet_masks();
}

CollapseConjectureResult check_collapse_conjecture(const CoprimePair& p,
                                                   unsigned long long budget) {
    AssComplex hat = build_ass_hat(p);
    AssComplex ass = build_ass(p);
    CollapseConjectureResult out;
    out.search = collapse_to(hat.complex, ass.complex, budget);
    switch (out.search.status) {
        case CollapseStatus::reached: out.verdict = ConjectureVerdict::verified; break;
        case CollapseStatus::proved_impossible: out.verdict = ConjectureVerdict::refuted; break;
        case CollapseStatus::budget_exhausted: out.verdict = ConjectureVerdict::inconclusive; break;
    }
    for (const CollapseStep& s : out.search.sequence)
        out.witness.emplace_back(hat.face_of(s.facet), hat.face_of(s.free_face));
    return out;
}

AlexanderReport check_alexander_duality(const CoprimePair& p) {
    if (p.a() >= p.b()) throw std::invalid_argument("check_alexander_duality: requires a < b");
    CoprimePair dual(p.b() - p.a(), p.b());
    AlexanderReport rep;

    std::vector<Diagonal> mine = admissible_diagonals(p);
    std::vector<Diagonal> theirs = admissible_diagonals(dual);
    std::vector<Diagonal> all = polygon_diagonals(p.b());
    std::vector<Diagonal> merged(mine);
    merged.insert(merged.end(), theirs.begin(), theirs.end());
    std::sort(merged.begin(), merged.end());
    bool disjoint = std::adjacent_find(merged.begin(), merged.end()) == merged.end();
    rep.vertex_partition_ok = disjoint && merged == all;
    if (!rep.vertex_partition_ok) rep.detail = pair_str(p) + ": admissible sets do not partition";

    AssComplex ha = build_ass_hat(p), hd = build_ass_hat(dual);
    std::vector<long> ba = betti_numbers(ha.complex), bd = betti_numbers(hd.complex);
    long top = p.b() - 3;
    rep.pairing_ok = true;
    for (long i = -1; i <= top; ++i) {
        rep.betti.push_back(betti_aug(ha.complex, ba, i));
        rep.betti_dual.push_back(betti_aug(hd.complex, bd, i));
    }
    for (long i = -1; i <= top; ++i) {
        long lhs = rep.betti[i + 1];
        long rhs = rep.betti_dual[top - 1 - i + 1];  // degree (b-4)-i
        if (lhs != rhs) {
            rep.pairing_ok = false;
            if (rep.detail.empty())
                rep.detail = pair_str(p) + ": Betti pairing fails in degree " + std::to_string(i);
        }
    }
    return rep;
}

}  // namespace ratcat
