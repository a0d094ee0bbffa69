#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratcat/numbers.hpp"

namespace ratcat {

struct not_pure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct multiple_minimal_new_faces : std::runtime_error {
    multiple_minimal_new_faces(const std::string& msg, long k)
        : std::runtime_error(msg), position(k) {}
    long position;  // 1-based index of the offending facet
};

struct no_new_face : std::runtime_error {
    no_new_face(const std::string& msg, long k) : std::runtime_error(msg), position(k) {}
    long position;
};

/// Finite simplicial complex on ground set {0, ..., n-1}, n <= 64, stored by
/// its inclusion-maximal faces as bitmasks. Always contains the empty face.
class SimplicialComplex {
public:
    static constexpr long max_vertices = 64;

    SimplicialComplex(long n_vertices, const std::vector<std::vector<int>>& facets);
    SimplicialComplex(long n_vertices, std::vector<std::uint64_t> facet_masks);

    long vertex_count() const { return n_; }
    const std::vector<std::uint64_t>& facet_masks() const { return facets_; }
    std::vector<std::vector<int>> facets() const;

    /// Largest face cardinality minus one; -1 for the empty-face complex.
    long dimension() const;
    bool is_pure() const;
    bool contains(std::uint64_t face) const;

    /// Every face, the empty one included, sorted by dimension then
    /// lexicographically on sorted vertex lists.
    std::vector<std::uint64_t> all_faces() const;

private:
    long n_ = 0;
    std::vector<std::uint64_t> facets_;
};

/// Face and h-polynomial data; indices run from -1 to dim, stored with a +1
/// offset so that f_at(-1) is the empty-face count.
struct FHVector {
    long dim = -1;
    std::vector<BigInt> f;
    std::vector<BigInt> h;

    const BigInt& f_at(long i) const { return f.at(i + 1); }
    const BigInt& h_at(long i) const { return h.at(i + 1); }
};

FHVector f_h_vectors(const SimplicialComplex& k);

/// Sum over all faces, the empty one included, of (-1)^dim.
BigInt reduced_euler(const SimplicialComplex& k);

/// Inverse of the f -> h transform, for round-trip checks.
std::vector<BigInt> f_from_h(const std::vector<BigInt>& h, long dim);

struct ShellingCertificate {
    std::vector<std::uint64_t> order;
    std::vector<std::uint64_t> minimal_faces;  // minimal new face per facet
};

/// Certifies that each facet in the order contributes a unique minimal new
/// face, and that the census of their dimensions reproduces the h-vector.
/// Throws not_pure / no_new_face / multiple_minimal_new_faces otherwise.
ShellingCertificate verify_shelling(const SimplicialComplex& k,
                                    const std::vector<std::uint64_t>& order);

enum class CollapseStatus { reached, budget_exhausted, proved_impossible };

struct CollapseStep {
    std::uint64_t facet;
    std::uint64_t free_face;
};

struct CollapseResult {
    CollapseStatus status;
    std::vector<CollapseStep> sequence;  // meaningful when status == reached
    unsigned long long nodes_visited = 0;
};

/// Backtracking search for a sequence of elementary collapses from k down to
/// exactly the target subcomplex. Free pairs are tried in lexicographic
/// order on sorted vertex labels; exhausting the search space proves
/// impossibility, exhausting the node budget does not.
CollapseResult collapse_to(const SimplicialComplex& k, const SimplicialComplex& target,
                           unsigned long long budget = 10'000'000);

/// Reduced rational Betti numbers in degrees 0..dim (empty when dim < 0),
/// from exact integer boundary-matrix ranks. The degree -1 number is 1
/// exactly when the complex has no vertices.
std::vector<long> betti_numbers(const SimplicialComplex& k);

/// Exact rank of a sparse integer matrix; rows as (column, value) lists.
long matrix_rank_exact(std::vector<std::vector<std::pair<int, BigInt>>> rows, int ncols);

}  // namespace ratcat
