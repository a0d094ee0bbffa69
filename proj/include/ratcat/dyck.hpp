#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratcat/numbers.hpp"

namespace ratcat {

struct Point {
    long x = 0;
    long y = 0;
    bool operator==(const Point&) const = default;
};

struct wrong_step_counts : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct below_diagonal : std::invalid_argument {
    below_diagonal(const std::string& msg, Point p) : std::invalid_argument(msg), where(p) {}
    Point where;
};

struct not_a_laser_source : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A laser never ends on a lattice point, so this fires only on a broken
/// path invariant.
struct internal_geometry_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Lattice path of a north and b east steps from (0,0) to (b,a) whose
/// interior points all satisfy b*y > a*x. Immutable once constructed.
class DyckPath {
public:
    /// Checks step counts and the strict above-diagonal condition.
    DyckPath(const CoprimePair& pair, std::string word);

    const CoprimePair& pair() const { return pair_; }
    const std::string& word() const { return word_; }
    long a() const { return pair_.a(); }
    long b() const { return pair_.b(); }

    /// Point reached after the first n steps.
    Point point_after(long n) const;

    /// x-coordinate of the north step from height h-1 to h, 1 <= h <= a.
    long north_x(long h) const { return north_x_[h - 1]; }

    /// x where the path leaves height h going north (b for h = a).
    long leave_x(long h) const { return h == a() ? b() : north_x_[h]; }

    bool operator==(const DyckPath& o) const = default;

private:
    CoprimePair pair_;
    std::string word_;
    std::vector<long> north_x_;
};

/// Slope-a/b segment from a north-step bottom to its first intersection
/// with the path, always in the interior of an east step. All coordinates
/// exact: end_x = end_x_num / a.
struct Laser {
    Point source;
    long end_height = 0;   // height of the east step that stops the laser
    BigInt end_x_num = 0;  // numerator of end_x over denominator a
    Point hit_step_right_end;

    /// b*y - a*x along the segment; distinct lasers of one path have
    /// distinct intercepts.
    long intercept(const CoprimePair& p) const {
        return p.b() * source.y - p.a() * source.x;
    }
};

/// Run-length encoding of a path; see run_word().
struct RunWord {
    enum class Kind { vertical, horizontal };
    Kind kind;
    std::vector<long> letters;
};

struct PathStatistics {
    std::vector<Point> valleys;        // preceded by E, followed by N
    std::vector<Point> north_bottoms;  // bottoms of north steps, origin excluded
    RunTypeVector run_type;
    long nontrivial_runs = 0;  // maximal nonempty north runs = valleys + 1
};

DyckPath validate(const CoprimePair& pair, const std::string& word);

/// All (a,b)-Dyck paths in lexicographic order of their partitions.
std::vector<DyckPath> enumerate_paths(const CoprimePair& pair);

/// Streaming form of the enumeration, same order.
void for_each_path(const CoprimePair& pair, const std::function<void(const DyckPath&)>& fn);

/// Partition with a-1 parts traced to the northwest of the path.
std::vector<long> to_partition(const DyckPath& d);

/// Inverse of to_partition; accepts any suffix-truncated partition (missing
/// parts are zero) and rejects parts that exceed the staircase bound.
DyckPath from_partition(const CoprimePair& pair, const std::vector<long>& lambda);

/// Vertical kind: per east step, southwest to northeast, the length of the
/// north run immediately before it (length b, entries sum to a).
/// Horizontal kind: per north step, northeast to southwest, the length of
/// the east run immediately after it (length a, entries sum to b).
RunWord run_word(const DyckPath& d, RunWord::Kind kind);

DyckPath from_run_word(const CoprimePair& pair, const RunWord& w);

/// The unique cyclic conjugate of a vertical run word that encodes a Dyck
/// path, together with the left-rotation offset that produced it.
std::pair<DyckPath, long> cycle_rectify(const CoprimePair& pair, const std::vector<long>& word);

PathStatistics statistics(const DyckPath& d);

Laser fire_laser(const DyckPath& d, Point p);

/// One promotion sweep: visit the a+b-1 internal lattice points of the
/// mutating path from southwest to northeast and swap each NE/EN corner
/// whenever the swap leaves a valid path. A bijection whose order divides
/// a+b-1.
DyckPath promote(const DyckPath& d);

}  // namespace ratcat
