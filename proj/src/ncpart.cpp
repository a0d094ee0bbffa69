#include "ratcat/ncpart.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ratcat {

SetPartition::SetPartition(long m, std::vector<std::vector<int>> blocks)
    : m_(m), blocks_(std::move(blocks)) {
    if (m < 0) throw std::invalid_argument("SetPartition: negative ground size");
    block_of_.assign(m, -1);
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    for (std::size_t k = 0; k < blocks_.size(); ++k)
        for (int i : blocks_[k]) {
            if (i < 1 || i > m) throw std::invalid_argument("SetPartition: element out of range");
            if (block_of_[i - 1] != -1)
                throw std::invalid_argument("SetPartition: blocks are not disjoint");
            block_of_[i - 1] = static_cast<int>(k);
        }
    for (int k : block_of_)
        if (k == -1) throw std::invalid_argument("SetPartition: blocks do not cover the ground set");
}

std::vector<int> region_assignment(const DyckPath& d, const std::vector<Laser>& lasers,
                                   const std::vector<Point>& labels) {
    long a = d.a(), b = d.b();
    std::vector<int> assign(labels.size(), -1);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const Point& p = labels[i];
        long best_intercept = 0;
        for (std::size_t j = 0; j < lasers.size(); ++j) {
            const Laser& l = lasers[j];
            if (l.source.x > p.x) continue;
            if (BigInt(a * p.x) >= l.end_x_num) continue;           // past the endpoint
            if (b * l.source.y + a * (p.x - l.source.x) >= b * p.y) continue;  // not below
            long c = l.intercept(d.pair());
            if (assign[i] == -1 || c > best_intercept) {
                assign[i] = static_cast<int>(j);
                best_intercept = c;
            }
        }
    }
    return assign;
}

SetPartition region_blocks(const DyckPath& d, const std::vector<Point>& sources,
                           const std::vector<Point>& labels) {
    long prev = -1;
    for (const Point& p : labels) {
        bool on = p.y == 0 ? p.x == 0
                           : p.y >= 1 && p.y <= d.a() && p.x >= d.north_x(p.y) &&
                                 p.x <= d.leave_x(p.y);
        if (!on) throw std::invalid_argument("region_blocks: label is not on the path");
        if (p.x + p.y <= prev)
            throw std::invalid_argument("region_blocks: labels must come in path order");
        prev = p.x + p.y;
    }
    std::vector<Laser> lasers;
    lasers.reserve(sources.size());
    for (const Point& s : sources) lasers.push_back(fire_laser(d, s));
    std::vector<int> assign = region_assignment(d, lasers, labels);
    std::map<int, std::vector<int>> groups;
    for (std::size_t i = 0; i < labels.size(); ++i)
        groups[assign[i]].push_back(static_cast<int>(i) + 1);
    std::vector<std::vector<int>> blocks;
    for (auto& [key, members] : groups) blocks.push_back(std::move(members));
    return SetPartition(static_cast<long>(labels.size()), std::move(blocks));
}

namespace {

std::vector<Point> internal_points(const DyckPath& d) {
    std::vector<Point> pts;
    long n = d.a() + d.b();
    pts.reserve(n - 1);
    Point p;
    for (long i = 0; i + 1 < n; ++i) {
        if (d.word()[i] == 'N')
            ++p.y;
        else
            ++p.x;
        pts.push_back(p);
    }
    return pts;
}

std::vector<Point> east_right_ends(const DyckPath& d) {
    std::vector<Point> pts;
    Point p;
    for (char c : d.word()) {
        if (c == 'N') {
            ++p.y;
        } else {
            ++p.x;
            pts.push_back(p);
        }
    }
    pts.pop_back();  // the terminal corner carries no label
    return pts;
}

}  // namespace

SetPartition homogeneous(const DyckPath& d) {
    if (d.a() >= d.b()) throw std::invalid_argument("homogeneous: requires a < b");
    return region_blocks(d, statistics(d).north_bottoms, internal_points(d));
}

SetPartition inhomogeneous(const DyckPath& d) {
    if (d.a() >= d.b()) throw std::invalid_argument("inhomogeneous: requires a < b");
    return region_blocks(d, statistics(d).valleys, east_right_ends(d));
}

bool is_noncrossing(const SetPartition& p) {
    // two blocks cross exactly when their merged id-sequence alternates
    // through four or more runs
    const auto& bs = p.blocks();
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = i + 1; j < bs.size(); ++j) {
            auto a = bs[i].begin(), ae = bs[i].end();
            auto b = bs[j].begin(), be = bs[j].end();
            int runs = 0, last = 0;
            while (a != ae || b != be) {
                int cur = (b == be || (a != ae && *a < *b)) ? 1 : 2;
                if (cur == 1)
                    ++a;
                else
                    ++b;
                if (cur != last) {
                    ++runs;
                    last = cur;
                }
            }
            if (runs >= 4) return false;
        }
    return true;
}

SetPartition rotate(const SetPartition& p) {
    long m = p.ground_size();
    std::vector<std::vector<int>> blocks;
    for (const auto& b : p.blocks()) {
        std::vector<int> nb;
        for (int i : b) nb.push_back(i == 1 ? static_cast<int>(m) : i - 1);
        blocks.push_back(std::move(nb));
    }
    return SetPartition(m, std::move(blocks));
}

std::vector<SetPartition> nc_covers(const SetPartition& p) {
    if (!is_noncrossing(p)) throw std::invalid_argument("nc_covers: partition must be noncrossing");
    std::vector<SetPartition> out;
    const auto& bs = p.blocks();
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = i + 1; j < bs.size(); ++j) {
            std::vector<std::vector<int>> blocks;
            std::vector<int> merged = bs[i];
            merged.insert(merged.end(), bs[j].begin(), bs[j].end());
            blocks.push_back(std::move(merged));
            for (std::size_t k = 0; k < bs.size(); ++k)
                if (k != i && k != j) blocks.push_back(bs[k]);
            SetPartition q(p.ground_size(), std::move(blocks));
            if (is_noncrossing(q)) out.push_back(std::move(q));
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const SetPartition& p) {
    std::string s = "{";
    for (std::size_t k = 0; k < p.blocks().size(); ++k) {
        if (k) s += " | ";
        for (std::size_t i = 0; i < p.blocks()[k].size(); ++i) {
            if (i) s += ",";
            s += std::to_string(p.blocks()[k][i]);
        }
    }
    return s + "}";
}

namespace {

// Cycle type of the promotion permutation on the enumeration.
std::vector<long> promotion_orbit_sizes(const std::vector<DyckPath>& paths) {
    std::map<std::string, long> index;
    for (std::size_t i = 0; i < paths.size(); ++i) index[paths[i].word()] = static_cast<long>(i);
    std::vector<long> perm(paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i) perm[i] = index.at(promote(paths[i]).word());
    std::vector<bool> seen(paths.size(), false);
    std::vector<long> sizes;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (seen[i]) continue;
        long len = 0;
        for (long j = static_cast<long>(i); !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        sizes.push_back(len);
    }
    return sizes;
}

}  // namespace

PromotionReport verify_promotion_rotation(const CoprimePair& p) {
    PromotionReport rep;
    std::vector<DyckPath> paths = enumerate_paths(p);
    for (const DyckPath& d : paths) {
        if (!(homogeneous(promote(d)) == rotate(homogeneous(d)))) {
            rep.ok = false;
            rep.detail = "promotion/rotation mismatch at " + d.word();
            return rep;
        }
    }
    long m = p.a() + p.b() - 1;
    for (long s : promotion_orbit_sizes(paths)) {
        rep.orbit_census[s] += 1;
        if (m % s != 0) {
            rep.ok = false;
            rep.detail = "orbit size " + std::to_string(s) + " does not divide " + std::to_string(m);
        }
    }
    return rep;
}

CspReport csp_check(const CoprimePair& p) {
    CspReport rep;
    rep.fuss = (p.b() - 1) % p.a() == 0;
    std::vector<DyckPath> paths = enumerate_paths(p);
    std::vector<long> orbit_sizes = promotion_orbit_sizes(paths);
    IntPolynomial x = q_rational_catalan(p);
    long m = p.a() + p.b() - 1;
    for (long d = 0; d < m; ++d) {
        CspReport::PerOrder row;
        row.d = d;
        for (long s : orbit_sizes)
            if (d % s == 0) row.fixed_points += s;
        row.evaluation = eval_at_root_of_unity(x, m, d);
        row.ok = row.evaluation && *row.evaluation == row.fixed_points;
        if (!row.ok) rep.ok = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

FilterReport verify_order_filter(const CoprimePair& p) {
    FilterReport rep;
    std::set<SetPartition> image;
    for_each_path(p, [&](const DyckPath& d) { image.insert(inhomogeneous(d)); });
    rep.image_size = static_cast<long>(image.size());
    for (const SetPartition& pi : image)
        for (const SetPartition& cover : nc_covers(pi))
            if (!image.count(cover)) {
                rep.ok = false;
                rep.detail = "cover " + to_string(cover) + " of " + to_string(pi) + " escapes the image";
                return rep;
            }
    return rep;
}

RotationProbe probe_inhomogeneous_rotation(const CoprimePair& p) {
    RotationProbe probe;
    std::vector<DyckPath> paths = enumerate_paths(p);
    std::map<SetPartition, long> image;
    for (std::size_t i = 0; i < paths.size(); ++i)
        image.emplace(inhomogeneous(paths[i]), static_cast<long>(i));
    probe.verified = true;
    probe.induced_permutation.assign(paths.size(), -1);
    for (const auto& [pi, idx] : image) {
        SetPartition r = rotate(pi);
        auto it = image.find(r);
        if (it == image.end()) {
            probe.verified = false;
            probe.witness = "rotate(" + to_string(pi) + ") = " + to_string(r) + " is not realized";
            probe.induced_permutation.clear();
            return probe;
        }
        probe.induced_permutation[idx] = it->second;
    }
    return probe;
}

}  // namespace ratcat
