#pragma once

#include <string>

#include "ratcat/assoc.hpp"
#include "ratcat/dyck.hpp"
#include "ratcat/ncpart.hpp"

namespace ratcat {

enum class LaserChoice { none, valleys, all };

/// Grid, diagonal, and path; laser segments drawn to their exact endpoints.
std::string svg_dyck(const DyckPath& d, LaserChoice lasers);

/// The polygon on b+1 vertices with the path's laser diagonals.
std::string svg_dissection(const DyckPath& d);

/// Disk with the partition's blocks drawn as chords.
std::string svg_chords(const SetPartition& p);

/// Exact decimal rendering of num/den to six places, round half away from
/// zero; keeps laser endpoints float-free.
std::string fixed6(long long num, long long den);

}  // namespace ratcat
