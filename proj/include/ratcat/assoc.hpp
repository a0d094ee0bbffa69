#pragma once

#include <string>
#include <vector>

#include "ratcat/dyck.hpp"
#include "ratcat/scomplex.hpp"

namespace ratcat {

/// Diagonal {u,v} of the polygon on b+1 vertices labeled 1..b+1 clockwise;
/// stored with u < v and never joining adjacent polygon vertices.
struct Diagonal {
    int u = 0;
    int v = 0;
    bool operator==(const Diagonal&) const = default;
    auto operator<=>(const Diagonal&) const = default;
};

/// All diagonals of the polygon on b+1 vertices, sorted.
std::vector<Diagonal> polygon_diagonals(long b);

/// S(a,b) = { floor(i*b/a) : 1 <= i < a }, sorted.
std::vector<long> admissible_set(const CoprimePair& p);

/// A diagonal separating i from b-1-i polygon vertices is admissible when
/// either separation count lies in S(a,b).
bool is_admissible(const CoprimePair& p, const Diagonal& d);

std::vector<Diagonal> admissible_diagonals(const CoprimePair& p);

/// True unless the endpoint pairs strictly interleave around the polygon.
bool noncrossing(const Diagonal& d1, const Diagonal& d2);

/// The diagonal (P.x+1, Q.x+1) cut out by the laser fired from P.
Diagonal diagonal_of_laser(const DyckPath& d, Point p);

/// F(D): one laser diagonal per non-origin north-step bottom; a-1 mutually
/// noncrossing admissible diagonals, sorted.
std::vector<Diagonal> facet_diagonals(const DyckPath& d);

/// A complex over admissible diagonals; complex vertex i is vertices[i].
struct AssComplex {
    CoprimePair pair;
    std::vector<Diagonal> vertices;
    SimplicialComplex complex;

    std::uint64_t mask_of(const std::vector<Diagonal>& face) const;
    std::vector<Diagonal> face_of(std::uint64_t mask) const;
};

/// The associahedron: facets are the laser-diagonal sets of all Dyck paths.
AssComplex build_ass(const CoprimePair& p);

/// The flag complex of mutually noncrossing admissible diagonals; facets by
/// maximal-clique enumeration on the noncrossing graph.
AssComplex build_ass_hat(const CoprimePair& p);

/// Facets in lexicographic order of the path partitions, with the valley
/// face of each path. verify_shelling certifies this order with minimal
/// faces equal to the valley faces.
struct ShellingData {
    AssComplex ass;
    std::vector<DyckPath> paths;
    std::vector<std::uint64_t> order;
    std::vector<std::uint64_t> valleys;
};

ShellingData shelling_order(const CoprimePair& p);

struct IdentityReport {
    bool ok = true;
    std::string detail;  // first failing identity, empty when ok
};

/// f-vector = Kirkman numbers, h-vector = Narayana numbers, |reduced Euler
/// characteristic| = derived Catalan, Betti numbers concentrated on top.
IdentityReport check_identities(const CoprimePair& p);

/// Facet-set equality of the two complexes (the Fuss case b = ma+1).
bool ass_equals_ass_hat(const CoprimePair& p);

enum class ConjectureVerdict { verified, refuted, inconclusive };

struct CollapseConjectureResult {
    ConjectureVerdict verdict;
    CollapseResult search;
    std::vector<std::pair<std::vector<Diagonal>, std::vector<Diagonal>>> witness;
};

/// Searches for a collapse of the hat complex onto the associahedron.
CollapseConjectureResult check_collapse_conjecture(const CoprimePair& p,
                                                   unsigned long long budget = 10'000'000);

struct AlexanderReport {
    bool vertex_partition_ok = false;
    bool pairing_ok = false;
    std::vector<long> betti;       // hat(a,b), degrees -1..b-3
    std::vector<long> betti_dual;  // hat(b-a,b), degrees -1..b-3
    std::string detail;
    bool ok() const { return vertex_partition_ok && pairing_ok; }
};

/// Checks that admissible diagonals of (a,b) and (b-a,b) partition all
/// diagonals, and that the reduced Betti numbers of the two hat complexes
/// pair inside a (b-3)-sphere.
AlexanderReport check_alexander_duality(const CoprimePair& p);

}  // namespace ratcat
