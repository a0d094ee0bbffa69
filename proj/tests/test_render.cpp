#include <doctest.h>

#include "ratcat/render.hpp"

using namespace ratcat;

namespace {

long count_occurrences(const std::string& hay, const std::string& needle) {
    long n = 0;
    for (std::size_t at = hay.find(needle); at != std::string::npos;
         at = hay.find(needle, at + 1))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("exact six-place decimals") {
    CHECK(fixed6(8, 5) == "1.600000");
    CHECK(fixed6(18, 5) == "3.600000");
    CHECK(fixed6(3, 2) == "1.500000");
    CHECK(fixed6(34, 5) == "6.800000");
    CHECK(fixed6(7, 1) == "7.000000");
    CHECK(fixed6(0, 3) == "0.000000");
    CHECK(fixed6(1, 3) == "0.333333");
    CHECK(fixed6(2, 3) == "0.666667");
    CHECK(fixed6(-8, 5) == "-1.600000");
}

TEST_CASE("dyck rendering") {
    DyckPath d = validate(CoprimePair(5, 8), "NNEENNEEENEEE");
    std::string all = svg_dyck(d, LaserChoice::all);
    std::string valleys = svg_dyck(d, LaserChoice::valleys);
    std::string bare = svg_dyck(d, LaserChoice::none);

    CHECK(count_occurrences(all, "#cc2222") == 4);
    CHECK(count_occurrences(valleys, "#cc2222") == 2);
    CHECK(count_occurrences(bare, "#cc2222") == 0);

    SUBCASE("fractional laser endpoints are rendered exactly") {
        // the (3,5) top path fires from (0,1) to abscissa 10/3, which lands
        // on the pixel coordinate 460/3
        DyckPath high = validate(CoprimePair(3, 5), "NNNEEEEE");
        CHECK(svg_dyck(high, LaserChoice::all).find("153.333333") != std::string::npos);
    }

    SUBCASE("byte-identical across calls") {
        CHECK(svg_dyck(d, LaserChoice::all) == all);
        CHECK(svg_dissection(d) == svg_dissection(d));
        CHECK(svg_chords(homogeneous(d)) == svg_chords(homogeneous(d)));
    }
}

TEST_CASE("dissection rendering") {
    DyckPath d = validate(CoprimePair(5, 8), "NNEENNEEENEEE");
    std::string svg = svg_dissection(d);
    CHECK(count_occurrences(svg, "<line") == 4);   // the four facet diagonals
    CHECK(count_occurrences(svg, "<text") == 9);   // vertex labels of the 9-gon
}

TEST_CASE("chord rendering") {
    SetPartition p(7, {{1, 2, 7}, {3, 4, 5}, {6}});
    std::string svg = svg_chords(p);
    CHECK(count_occurrences(svg, "<polygon") == 2);  // singleton blocks draw no chords
    CHECK(count_occurrences(svg, "<text") == 7);
}
