#pragma once

#include <map>
#include <string>
#include <vector>

#include "ratcat/dyck.hpp"

namespace ratcat {

/// Partition of {1..m} into disjoint nonempty blocks, kept canonical:
/// elements sorted within blocks, blocks sorted by minimum.
class SetPartition {
public:
    SetPartition(long m, std::vector<std::vector<int>> blocks);

    long ground_size() const { return m_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    /// Index into blocks() of the block containing i.
    int block_of(int i) const { return block_of_.at(i - 1); }

    bool operator==(const SetPartition&) const = default;
    auto operator<=>(const SetPartition& o) const { return blocks_ <=> o.blocks_; }

private:
    long m_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
};

/// Lower-boundary assignment per labeled point: the index into the fired
/// lasers, or -1 for the base diagonal. Two labels share a region exactly
/// when they share a lower boundary.
std::vector<int> region_assignment(const DyckPath& d, const std::vector<Laser>& lasers,
                                   const std::vector<Point>& labels);

/// Fires one laser per source and groups the labeled points by the highest
/// laser strictly below each label (or the base diagonal). Labels are
/// 1..n in the given order.
SetPartition region_blocks(const DyckPath& d, const std::vector<Point>& sources,
                           const std::vector<Point>& labels);

/// Partition of [a+b-1]: lasers from every non-origin north-step bottom,
/// labels on all internal lattice points in path order.
SetPartition homogeneous(const DyckPath& d);

/// Partition of [b-1]: lasers from the valleys only, labels on the right
/// ends of east steps, terminal corner excluded.
SetPartition inhomogeneous(const DyckPath& d);

bool is_noncrossing(const SetPartition& p);

/// Relabels i -> i-1 cyclically (1 -> m).
SetPartition rotate(const SetPartition& p);

/// All noncrossing merges of two blocks: the covers of p in the noncrossing
/// partition lattice under refinement.
std::vector<SetPartition> nc_covers(const SetPartition& p);

struct PromotionReport {
    bool ok = true;
    std::string detail;
    std::map<long, long> orbit_census;  // orbit size -> number of orbits
};

/// homogeneous(promote(D)) = rotate(homogeneous(D)) across the full
/// enumeration, and promotion has order dividing a+b-1.
PromotionReport verify_promotion_rotation(const CoprimePair& p);

struct CspReport {
    struct PerOrder {
        long d = 0;
        BigInt fixed_points;
        std::optional<BigInt> evaluation;
        bool ok = false;
    };
    bool ok = true;
    bool fuss = false;  // b = 1 mod a: the proven range
    std::vector<PerOrder> rows;
};

/// Counts fixed points of each promotion power and compares against the
/// q-Catalan polynomial at roots of unity of order a+b-1.
CspReport csp_check(const CoprimePair& p);

struct FilterReport {
    bool ok = true;
    long image_size = 0;
    std::string detail;
};

/// The inhomogeneous image is an order filter: every noncrossing cover of an
/// image partition is again in the image.
FilterReport verify_order_filter(const CoprimePair& p);

struct RotationProbe {
    bool verified = false;
    std::string witness;                  // counterexample partition when refuted
    std::vector<long> induced_permutation;  // path index -> path index when verified
};

/// Whether rotation maps the inhomogeneous image onto itself; on success the
/// induced permutation of Dyck paths (in enumeration order) comes along.
RotationProbe probe_inhomogeneous_rotation(const CoprimePair& p);

std::string to_string(const SetPartition& p);

}  // namespace ratcat
