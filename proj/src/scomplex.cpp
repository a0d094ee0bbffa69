#include "ratcat/scomplex.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

namespace ratcat {

namespace {

int popcount(std::uint64_t m) { return std::popcount(m); }

std::vector<int> mask_vertices(std::uint64_t m) {
    std::vector<int> v;
    while (m) {
        v.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return v;
}

// Lexicographic order on sorted vertex lists.
bool face_lex_less(std::uint64_t x, std::uint64_t y) {
    while (x && y) {
        int vx = std::countr_zero(x), vy = std::countr_zero(y);
        if (vx != vy) return vx < vy;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

void canonical_facet_sort(std::vector<std::uint64_t>& facets) {
    std::sort(facets.begin(), facets.end(), [](std::uint64_t x, std::uint64_t y) {
        return face_lex_less(x, y);
    });
}

}  // namespace

SimplicialComplex::SimplicialComplex(long n_vertices, std::vector<std::uint64_t> facet_masks)
    : n_(n_vertices) {
    if (n_ < 0 || n_ > max_vertices)
        throw std::invalid_argument("SimplicialComplex: ground set must have 0..64 vertices");
    std::uint64_t ground = n_ == 64 ? ~0ULL : (1ULL << n_) - 1;
    for (std::uint64_t f : facet_masks)
        if (f & ~ground)
            throw std::invalid_argument("SimplicialComplex: facet vertex outside the ground set");
    std::sort(facet_masks.begin(), facet_masks.end());
    facet_masks.erase(std::unique(facet_masks.begin(), facet_masks.end()), facet_masks.end());
    for (std::uint64_t f : facet_masks) {
        bool maximal = true;
        for (std::uint64_t g : facet_masks)
            if (g != f && (f & ~g) == 0) {
                maximal = false;
                break;
            }
        if (maximal) facets_.push_back(f);
    }
    if (facets_.empty()) facets_.push_back(0);  // the empty face is always present
    canonical_facet_sort(facets_);
}

SimplicialComplex::SimplicialComplex(long n_vertices, const std::vector<std::vector<int>>& facets)
    : SimplicialComplex(n_vertices, [&] {
          std::vector<std::uint64_t> masks;
          masks.reserve(facets.size());
          for (const auto& f : facets) {
              std::uint64_t m = 0;
              for (int v : f) {
                  if (v < 0 || v >= n_vertices)
                      throw std::invalid_argument("SimplicialComplex: facet vertex outside the ground set");
                  m |= 1ULL << v;
              }
              masks.push_back(m);
          }
          return masks;
      }()) {}

std::vector<std::vector<int>> SimplicialComplex::facets() const {
    std::vector<std::vector<int>> out;
    out.reserve(facets_.size());
    for (std::uint64_t f : facets_) out.push_back(mask_vertices(f));
    return out;
}

long SimplicialComplex::dimension() const {
    long d = -1;
    for (std::uint64_t f : facets_) d = std::max<long>(d, popcount(f) - 1);
    return d;
}

bool SimplicialComplex::is_pure() const {
    for (std::uint64_t f : facets_)
        if (popcount(f) != popcount(facets_.front())) return false;
    return true;
}

bool SimplicialComplex::contains(std::uint64_t face) const {
    for (std::uint64_t f : facets_)
        if ((face & ~f) == 0) return true;
    return false;
}

std::vector<std::uint64_t> SimplicialComplex::all_faces() const {
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t f : facets_) {
        std::uint64_t sub = f;
        while (true) {
            seen.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    std::vector<std::uint64_t> faces(seen.begin(), seen.end());
    std::sort(faces.begin(), faces.end(), [](std::uint64_t x, std::uint64_t y) {
        if (popcount(x) != popcount(y)) return popcount(x) < popcount(y);
        return face_lex_less(x, y);
    });
    return faces;
}

FHVector f_h_vectors(const SimplicialComplex& k) {
    long d = k.dimension();
    FHVector out;
    out.dim = d;
    out.f.assign(d + 2, 0);
    for (std::uint64_t face : k.all_faces()) out.f[popcount(face)] += 1;
    out.h.assign(d + 2, 0);
    // h_j is the t^(d-j) coefficient of sum_i f_i (t-1)^(d-i)
    for (long j = -1; j <= d; ++j) {
        BigInt hj = 0;
        for (long i = -1; i <= d; ++i) {
            BigInt term = out.f_at(i) * binomial(d - i, d - j);
            hj += (j - i) % 2 != 0 ? -term : term;
        }
        out.h[j + 1] = hj;
    }
    return out;
}

std::vector<BigInt> f_from_h(const std::vector<BigInt>& h, long dim) {
    std::vector<BigInt> f(dim + 2, 0);
    for (long i = -1; i <= dim; ++i)
        for (long j = -1; j <= dim; ++j)
            f[i + 1] += h.at(j + 1) * binomial(dim - j, dim - i);
    return f;
}

BigInt reduced_euler(const SimplicialComplex& k) {
    BigInt chi = 0;
    for (std::uint64_t face : k.all_faces()) chi += popcount(face) % 2 == 0 ? -1 : 1;
    return chi;
}

namespace {

// Keeps only the inclusion-maximal masks.
std::vector<std::uint64_t> maximal_members(std::vector<std::uint64_t> ms) {
    std::vector<std::uint64_t> out;
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    for (std::uint64_t m : ms) {
        bool maximal = true;
        for (std::uint64_t o : ms)
            if (o != m && (m & ~o) == 0) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(m);
    }
    return out;
}

}  // namespace

ShellingCertificate verify_shelling(const SimplicialComplex& k,
                                    const std::vector<std::uint64_t>& order) {
    if (!k.is_pure()) throw not_pure("verify_shelling: complex is not pure");
    {
        std::vector<std::uint64_t> a = order, b = k.facet_masks();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            throw std::invalid_argument("verify_shelling: order is not a permutation of the facets");
    }

    ShellingCertificate cert;
    cert.order = order;
    std::vector<long> census(k.dimension() + 2, 0);
    for (std::size_t kk = 0; kk < order.size(); ++kk) {
        std::uint64_t f = order[kk];
        std::vector<std::uint64_t> inters;
        for (std::size_t i = 0; i < kk; ++i) inters.push_back(order[i] & f);
        inters = maximal_members(inters);
        auto is_old = [&](std::uint64_t t) {
            for (std::uint64_t j : inters)
                if ((t & ~j) == 0) return true;
            return false;
        };
        // A subset of f is minimal-new when it is new and all its codim-1
        // subsets are old; for k = 0 that is the empty face.
        std::vector<std::uint64_t> minimal;
        std::uint64_t sub = f;
        while (true) {
            if (!is_old(sub)) {
                bool min_new = true;
                std::uint64_t m = sub;
                while (m && min_new) {
                    std::uint64_t bit = m & (~m + 1);
                    if (!is_old(sub ^ bit)) min_new = false;
                    m &= m - 1;
                }
                if (min_new) minimal.push_back(sub);
            }
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
        if (minimal.empty())
            throw no_new_face("verify_shelling: facet adds no new face", static_cast<long>(kk) + 1);
        if (minimal.size() > 1)
            throw multiple_minimal_new_faces("verify_shelling: minimal new face is not unique",
                                             static_cast<long>(kk) + 1);
        cert.minimal_faces.push_back(minimal.front());
        census[popcount(minimal.front())] += 1;
    }

    FHVector fh = f_h_vectors(k);
    for (long j = -1; j <= k.dimension(); ++j)
        if (fh.h_at(j) != census[j + 1])
            throw std::logic_error("verify_shelling: minimal-face census disagrees with h-vector");
    return cert;
}

namespace {

struct FaceVecHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
        std::size_t h = 1469598103934665603ULL;
        for (std::uint64_t x : v) {
            h ^= x;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

struct CollapseSearch {
    std::unordered_set<std::uint64_t> live;
    const std::unordered_set<std::uint64_t>* target;
    long n = 0;
    unsigned long long nodes = 0;
    unsigned long long budget = 0;
    bool truncated = false;
    std::vector<CollapseStep> seq;
    std::unordered_set<std::vector<std::uint64_t>, FaceVecHash> failed;
    static constexpr std::size_t memo_cap = 1 << 20;

    bool is_facet(std::uint64_t g) const {
        for (long u = 0; u < n; ++u) {
            std::uint64_t bit = 1ULL << u;
            if (!(g & bit) && live.count(g | bit)) return false;
        }
        return true;
    }

    bool is_free_under(std::uint64_t sub, std::uint64_t f) const {
        for (long u = 0; u < n; ++u) {
            std::uint64_t bit = 1ULL << u;
            if (sub & bit) continue;
            std::uint64_t h = sub | bit;
            if (h != f && live.count(h)) return false;
        }
        return true;
    }

    std::vector<CollapseStep> moves() const {
        std::vector<CollapseStep> out;
        for (std::uint64_t f : live) {
            if (target->count(f) || !is_facet(f)) continue;
            std::uint64_t m = f;
            while (m) {
                std::uint64_t bit = m & (~m + 1);
                std::uint64_t sub = f ^ bit;
                if (!target->count(sub) && is_free_under(sub, f))
                    out.push_back(CollapseStep{f, sub});
                m &= m - 1;
            }
        }
        std::sort(out.begin(), out.end(), [](const CollapseStep& x, const CollapseStep& y) {
            if (x.facet != y.facet) return face_lex_less(x.facet, y.facet);
            return face_lex_less(x.free_face, y.free_face);
        });
        return out;
    }

    std::vector<std::uint64_t> state_key() const {
        std::vector<std::uint64_t> key(live.begin(), live.end());
        std::sort(key.begin(), key.end());
        return key;
    }

    bool dfs() {
        if (live.size() == target->size()) return true;
        if (++nodes > budget) {
            truncated = true;
            return false;
        }
        for (const CollapseStep& mv : moves()) {
            live.erase(mv.facet);
            live.erase(mv.free_face);
            bool skip = failed.count(state_key()) > 0;
            if (!skip && dfs()) {
                seq.push_back(mv);
                return true;
            }
            if (!skip && !truncated && failed.size() < memo_cap) failed.insert(state_key());
            live.insert(mv.facet);
            live.insert(mv.free_face);
            if (truncated) return false;
        }
        return false;
    }
};

}  // namespace

CollapseResult collapse_to(const SimplicialComplex& k, const SimplicialComplex& target,
                           unsigned long long budget) {
    if (target.vertex_count() != k.vertex_count())
        throw std::invalid_argument("collapse_to: complexes must share a ground set");
    for (std::uint64_t f : target.facet_masks())
        if (!k.contains(f))
            throw std::invalid_argument("collapse_to: target is not a subcomplex");

    std::vector<std::uint64_t> all = k.all_faces();
    std::vector<std::uint64_t> tgt = target.all_faces();
    CollapseSearch s;
    s.live.insert(all.begin(), all.end());
    std::unordered_set<std::uint64_t> tset(tgt.begin(), tgt.end());
    s.target = &tset;
    s.n = k.vertex_count();
    s.budget = budget;

    if ((all.size() - tgt.size()) % 2 != 0)
        return CollapseResult{CollapseStatus::proved_impossible, {}, 0};

    bool ok = s.dfs();
    CollapseResult r;
    r.nodes_visited = s.nodes;
    if (ok) {
        std::reverse(s.seq.begin(), s.seq.end());
        r.status = CollapseStatus::reached;
        r.sequence = std::move(s.seq);
    } else {
        r.status = s.truncated ? CollapseStatus::budget_exhausted : CollapseStatus::proved_impossible;
    }
    return r;
}

long matrix_rank_exact(std::vector<std::vector<std::pair<int, BigInt>>> rows, int ncols) {
    using Row = std::vector<std::pair<int, BigInt>>;
    const std::size_t nr = rows.size();
    std::vector<bool> active(nr, true);
    std::vector<int> colcnt(ncols, 0);
    for (auto& r : rows) {
        std::sort(r.begin(), r.end());
        for (auto& [c, v] : r)
            if (v != 0) ++colcnt[c];
    }

    auto content_reduce = [](Row& r) {
        BigInt g = 0;
        for (auto& [c, v] : r) {
            g = boost::multiprecision::gcd(g, v);
            if (g == 1) return;
        }
        if (g > 1)
            for (auto& [c, v] : r) v /= g;
    };

    long rank = 0;
    while (true) {
        // pick a pivot: unit entries first, then lowest fill score
        long best_row = -1;
        int best_col = -1;
        bool best_unit = false;
        long best_score = 0;
        for (std::size_t i = 0; i < nr; ++i) {
            if (!active[i] || rows[i].empty()) continue;
            long rn = static_cast<long>(rows[i].size()) - 1;
            for (auto& [c, v] : rows[i]) {
                bool unit = v == 1 || v == -1;
                long score = rn * (colcnt[c] - 1);
                bool better;
                if (best_row < 0)
                    better = true;
                else if (unit != best_unit)
                    better = unit;
                else if (score != best_score)
                    better = score < best_score;
                else
                    better = c < best_col;
                if (better) {
                    best_row = static_cast<long>(i);
                    best_col = c;
                    best_unit = unit;
                    best_score = score;
                }
            }
        }
        if (best_row < 0) break;

        ++rank;
        Row pivot_row = std::move(rows[best_row]);
        active[best_row] = false;
        for (auto& [c, v] : pivot_row) --colcnt[c];
        BigInt pv;
        for (auto& [c, v] : pivot_row)
            if (c == best_col) pv = v;

        for (std::size_t i = 0; i < nr; ++i) {
            if (!active[i]) continue;
            BigInt w = 0;
            for (auto& [c, v] : rows[i])
                if (c == best_col) {
                    w = v;
                    break;
                }
            if (w == 0) continue;
            BigInt g = boost::multiprecision::gcd(pv, w);
            BigInt mul_self = pv / g, mul_piv = w / g;
            // row_i <- mul_self * row_i - mul_piv * pivot_row, dropping best_col
            Row merged;
            merged.reserve(rows[i].size() + pivot_row.size());
            auto a = rows[i].begin(), ae = rows[i].end();
            auto b = pivot_row.begin(), be = pivot_row.end();
            while (a != ae || b != be) {
                if (b == be || (a != ae && a->first < b->first)) {
                    merged.emplace_back(a->first, mul_self * a->second);
                    ++a;
                } else if (a == ae || b->first < a->first) {
                    merged.emplace_back(b->first, -mul_piv * b->second);
                    ++b;
                } else {
                    BigInt val = mul_self * a->second - mul_piv * b->second;
                    if (val != 0) merged.emplace_back(a->first, std::move(val));
                    ++a;
                    ++b;
                }
            }
            std::erase_if(merged, [&](const auto& e) { return e.first == best_col; });
            if (!(mul_self == 1)) content_reduce(merged);
            for (auto& [c, v] : rows[i]) --colcnt[c];
            for (auto& [c, v] : merged) ++colcnt[c];
            rows[i] = std::move(merged);
        }
    }
    return rank;
}

std::vector<long> betti_numbers(const SimplicialComplex& k) {
    long d = k.dimension();
    if (d < 0) return {};
    std::vector<std::uint64_t> faces = k.all_faces();
    std::vector<std::vector<std::uint64_t>> by_dim(d + 2);
    for (std::uint64_t f : faces) by_dim[popcount(f)].push_back(f);

    // rank of the boundary map from dimension i faces, i = 0..d; the map in
    // degree 0 is the augmentation onto the empty face
    std::vector<long> rank(d + 2, 0);
    for (long i = 0; i <= d; ++i) {
        const auto& cols = by_dim[i + 1];
        const auto& row_faces = by_dim[i];
        if (cols.empty()) continue;
        std::unordered_map<std::uint64_t, int> row_of;
        row_of.reserve(row_faces.size());
        for (std::size_t r = 0; r < row_faces.size(); ++r)
            row_of[row_faces[r]] = static_cast<int>(r);
        std::vector<std::vector<std::pair<int, BigInt>>> rows(row_faces.size());
        for (std::size_t cidx = 0; cidx < cols.size(); ++cidx) {
            std::uint64_t f = cols[cidx];
            std::uint64_t m = f;
            int j = 0;
            while (m) {
                std::uint64_t bit = m & (~m + 1);
                rows[row_of.at(f ^ bit)].emplace_back(static_cast<int>(cidx),
                                                      j % 2 == 0 ? 1 : -1);
                m &= m - 1;
                ++j;
            }
        }
        rank[i] = matrix_rank_exact(std::move(rows), static_cast<int>(cols.size()));
    }

    std::vector<long> betti(d + 1, 0);
    for (long i = 0; i <= d; ++i)
        betti[i] = static_cast<long>(by_dim[i + 1].size()) - rank[i] - (i + 1 <= d ? rank[i + 1] : 0);
    return betti;
}

}  // namespace ratcat
