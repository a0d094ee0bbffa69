#include "ratcat/dyck.hpp"

#include <algorithm>

namespace ratcat {

namespace {

bool word_shape_ok(const CoprimePair& pair, const std::string& word) {
    long n = 0, e = 0;
    for (char c : word) {
        if (c == 'N')
            ++n;
        else if (c == 'E')
            ++e;
        else
            return false;
    }
    return n == pair.a() && e == pair.b();
}

// First interior point with b*y <= a*x, or nullopt when the word is a path.
std::optional<Point> first_violation(const CoprimePair& pair, const std::string& word) {
    long x = 0, y = 0;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (word[i] == 'N')
            ++y;
        else
            ++x;
        if (pair.b() * y <= pair.a() * x) return Point{x, y};
    }
    return std::nullopt;
}

}  // namespace

DyckPath::DyckPath(const CoprimePair& pair, std::string word)
    : pair_(pair), word_(std::move(word)) {
    if (!word_shape_ok(pair, word_))
        throw wrong_step_counts("DyckPath: word must consist of a 'N' and b 'E' steps");
    if (auto p = first_violation(pair, word_))
        throw below_diagonal("DyckPath: word dips to or below the diagonal", *p);
    north_x_.reserve(pair.a());
    long x = 0;
    for (char c : word_) {
        if (c == 'N')
            north_x_.push_back(x);
        else
            ++x;
    }
}

Point DyckPath::point_after(long n) const {
    Point p;
    for (long i = 0; i < n; ++i) {
        if (word_[i] == 'N')
            ++p.y;
        else
            ++p.x;
    }
    return p;
}

DyckPath validate(const CoprimePair& pair, const std::string& word) {
    return DyckPath(pair, word);
}

std::vector<long> to_partition(const DyckPath& d) {
    std::vector<long> lambda(d.a() - 1);
    for (long i = 1; i <= d.a() - 1; ++i) lambda[i - 1] = d.north_x(d.a() - i + 1);
    return lambda;
}

namespace {

std::string word_from_north_xs(const CoprimePair& pair, const std::vector<long>& xs) {
    std::string w;
    w.reserve(pair.a() + pair.b());
    long x = 0;
    for (long h = 1; h <= pair.a(); ++h) {
        for (; x < xs[h - 1]; ++x) w += 'E';
        w += 'N';
    }
    for (; x < pair.b(); ++x) w += 'E';
    return w;
}

long staircase_bound(const CoprimePair& pair, long i) {
    return std::max((pair.a() - i) * pair.b() / pair.a(), 0L);
}

}  // namespace

DyckPath from_partition(const CoprimePair& pair, const std::vector<long>& lambda) {
    long parts = pair.a() - 1;
    if (static_cast<long>(lambda.size()) > parts)
        throw std::invalid_argument("from_partition: too many parts");
    std::vector<long> full(lambda);
    full.resize(parts, 0);
    for (long i = 1; i <= parts; ++i) {
        if (full[i - 1] < 0 || (i > 1 && full[i - 1] > full[i - 2]))
            throw std::invalid_argument("from_partition: parts must weakly decrease");
        if (full[i - 1] > staircase_bound(pair, i))
            throw std::invalid_argument("from_partition: part exceeds the staircase bound");
    }
    std::vector<long> xs(pair.a(), 0);
    for (long h = 2; h <= pair.a(); ++h) xs[h - 1] = full[pair.a() - h];
    return DyckPath(pair, word_from_north_xs(pair, xs));
}

namespace {

void enumerate_rec(const CoprimePair& pair, long i, std::vector<long>& lambda,
                   const std::function<void(const DyckPath&)>& fn) {
    if (i > pair.a() - 1) {
        fn(from_partition(pair, lambda));
        return;
    }
    long hi = staircase_bound(pair, i);
    if (i > 1) hi = std::min(hi, lambda[i - 2]);
    for (long v = 0; v <= hi; ++v) {
        lambda[i - 1] = v;
        enumerate_rec(pair, i + 1, lambda, fn);
    }
}

}  // namespace

void for_each_path(const CoprimePair& pair, const std::function<void(const DyckPath&)>& fn) {
    std::vector<long> lambda(std::max(pair.a() - 1, 0L), 0);
    enumerate_rec(pair, 1, lambda, fn);
}

std::vector<DyckPath> enumerate_paths(const CoprimePair& pair) {
    std::vector<DyckPath> out;
    for_each_path(pair, [&](const DyckPath& d) { out.push_back(d); });
    return out;
}

RunWord run_word(const DyckPath& d, RunWord::Kind kind) {
    const std::string& w = d.word();
    std::vector<long> letters;
    if (kind == RunWord::Kind::vertical) {
        letters.reserve(d.b());
        long run = 0;
        for (char c : w) {
            if (c == 'N') {
                ++run;
            } else {
                letters.push_back(run);
                run = 0;
            }
        }
    } else {
        letters.reserve(d.a());
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] != 'N') continue;
            long run = 0;
            for (std::size_t j = i + 1; j < w.size() && w[j] == 'E'; ++j) ++run;
            letters.push_back(run);
        }
        std::reverse(letters.begin(), letters.end());
    }
    return RunWord{kind, std::move(letters)};
}

namespace {

std::string word_from_vertical(const std::vector<long>& letters) {
    std::string w;
    for (long c : letters) {
        w.append(c, 'N');
        w += 'E';
    }
    return w;
}

}  // namespace

DyckPath from_run_word(const CoprimePair& pair, const RunWord& w) {
    const auto& ls = w.letters;
    for (long c : ls)
        if (c < 0) throw std::invalid_argument("from_run_word: negative letter");
    long sum = 0;
    for (long c : ls) sum += c;
    if (w.kind == RunWord::Kind::vertical) {
        if (static_cast<long>(ls.size()) != pair.b() || sum != pair.a())
            throw std::invalid_argument("from_run_word: vertical word must have b letters summing to a");
        return DyckPath(pair, word_from_vertical(ls));
    }
    if (static_cast<long>(ls.size()) != pair.a() || sum != pair.b())
        throw std::invalid_argument("from_run_word: horizontal word must have a letters summing to b");
    std::string word;
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
        word += 'N';
        word.append(*it, 'E');
    }
    return DyckPath(pair, word);
}

std::pair<DyckPath, long> cycle_rectify(const CoprimePair& pair, const std::vector<long>& word) {
    if (static_cast<long>(word.size()) != pair.b())
        throw std::invalid_argument("cycle_rectify: word must have b letters");
    long sum = 0;
    for (long c : word) {
        if (c < 0) throw std::invalid_argument("cycle_rectify: negative letter");
        sum += c;
    }
    if (sum != pair.a()) throw std::invalid_argument("cycle_rectify: letters must sum to a");

    std::optional<long> found;
    std::vector<std::vector<long>> seen;
    for (long o = 0; o < pair.b(); ++o) {
        std::vector<long> conj(word.begin() + o, word.end());
        conj.insert(conj.end(), word.begin(), word.begin() + o);
        if (std::find(seen.begin(), seen.end(), conj) != seen.end())
            throw internal_geometry_error("cycle_rectify: conjugates not distinct");
        seen.push_back(conj);
        std::string w = word_from_vertical(conj);
        if (word_shape_ok(pair, w) && !first_violation(pair, w)) {
            if (found)
                throw internal_geometry_error("cycle_rectify: conjugate not unique");
            found = o;
        }
    }
    if (!found) throw internal_geometry_error("cycle_rectify: no valid conjugate");
    std::vector<long> conj(word.begin() + *found, word.end());
    conj.insert(conj.end(), word.begin(), word.begin() + *found);
    return {DyckPath(pair, word_from_vertical(conj)), *found};
}

PathStatistics statistics(const DyckPath& d) {
    const std::string& w = d.word();
    std::vector<Point> valleys, bottoms;
    std::vector<long> counts(d.a() + 1, 0);
    long nontrivial = 0;
    Point p;
    long run = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 'N') {
            if (p != Point{0, 0}) bottoms.push_back(p);
            if (i > 0 && w[i - 1] == 'E') valleys.push_back(p);
            if (i == 0 || w[i - 1] != 'N') ++nontrivial;
            ++p.y;
            ++run;
        } else {
            ++counts[run];
            run = 0;
            ++p.x;
        }
    }
    return PathStatistics{std::move(valleys), std::move(bottoms),
                          RunTypeVector(d.pair(), std::move(counts)), nontrivial};
}

Laser fire_laser(const DyckPath& d, Point p) {
    long a = d.a(), b = d.b();
    if (a >= b) throw std::invalid_argument("fire_laser: requires a < b");
    if (p == Point{0, 0} || p.y < 0 || p.y >= a || d.north_x(p.y + 1) != p.x)
        throw not_a_laser_source("fire_laser: point is not a non-origin north-step bottom");
    for (long h = p.y + 1; h <= a; ++h) {
        // crossing abscissa at height h is (a*p.x + b*(h - p.y)) / a, exactly
        long num = a * p.x + b * (h - p.y);
        if (num < a * d.leave_x(h)) {
            if (num <= a * d.north_x(h))
                throw internal_geometry_error("fire_laser: endpoint left of the east run");
            if (num % a == 0)
                throw internal_geometry_error("fire_laser: endpoint on a lattice point");
            return Laser{p, h, num, Point{num / a + 1, h}};
        }
    }
    throw internal_geometry_error("fire_laser: no intersection below the top edge");
}

DyckPath promote(const DyckPath& d) {
    long a = d.a(), b = d.b();
    std::string s = d.word();
    long x = 0, y = 0;  // point after the steps already visited
    for (long i = 1; i <= a + b - 1; ++i) {
        if (s[i - 1] != s[i]) {
            long nx = x + (s[i] == 'E' ? 1 : 0);
            long ny = y + (s[i] == 'N' ? 1 : 0);
            if (b * ny > a * nx) std::swap(s[i - 1], s[i]);
        }
        if (s[i - 1] == 'N')
            ++y;
        else
            ++x;
    }
    return DyckPath(d.pair(), s);
}

}  // namespace ratcat
