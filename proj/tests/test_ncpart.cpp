#include <doctest.h>

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "ratcat/ncpart.hpp"

using namespace ratcat;

namespace {

const CoprimePair p58(5, 8);
const std::string fig2 = "NNEENNEEENEEE";

SetPartition sp(long m, std::vector<std::vector<int>> blocks) {
    return SetPartition(m, std::move(blocks));
}

std::vector<CoprimePair> coprime_pairs(long max_sum) {
    std::vector<CoprimePair> out;
    for (long s = 3; s <= max_sum; ++s)
        for (long a = 1; 2 * a < s; ++a)
            if (std::gcd(a, s - a) == 1) out.emplace_back(a, s - a);
    return out;
}

}  // namespace

TEST_CASE("set partition canonical form") {
    SetPartition p = sp(4, {{3, 2}, {4, 1}});
    CHECK(p.blocks() == std::vector<std::vector<int>>{{1, 4}, {2, 3}});
    CHECK(p.block_of(2) == 1);
    CHECK_THROWS_AS(sp(3, {{1, 2}}), std::invalid_argument);          // not covering
    CHECK_THROWS_AS(sp(3, {{1, 2}, {2, 3}}), std::invalid_argument);  // overlapping
    CHECK_THROWS_AS(sp(3, {{1, 2, 3}, {}}), std::invalid_argument);   // empty block
    CHECK_THROWS_AS(sp(3, {{1, 2, 4}}), std::invalid_argument);       // out of range
}

TEST_CASE("noncrossing predicate") {
    CHECK(!is_noncrossing(sp(4, {{1, 3}, {2, 4}})));
    CHECK(is_noncrossing(sp(4, {{1, 4}, {2, 3}})));
    CHECK(is_noncrossing(sp(4, {{1, 2, 3, 4}})));
    CHECK(is_noncrossing(sp(5, {{1, 5}, {2, 3, 4}})));
    CHECK(!is_noncrossing(sp(6, {{1, 4}, {2, 5}, {3, 6}})));
}

TEST_CASE("rotation") {
    CHECK(rotate(sp(4, {{1, 4}, {2, 3}})) == sp(4, {{1, 2}, {3, 4}}));
    SUBCASE("rotating m times is the identity") {
        SetPartition p = sp(7, {{1, 2, 7}, {3, 4, 5}, {6}});
        SetPartition cur = p;
        for (long i = 0; i < 7; ++i) cur = rotate(cur);
        CHECK(cur == p);
    }
    CHECK(rotate(sp(3, {{1}, {2}, {3}})) == sp(3, {{1}, {2}, {3}}));
}

TEST_CASE("homogeneous partitions") {
    CoprimePair p23(2, 3);
    CHECK(homogeneous(validate(p23, "NNEEE")) == sp(4, {{1, 4}, {2, 3}}));
    CHECK(homogeneous(validate(p23, "NENEE")) == sp(4, {{1, 2}, {3, 4}}));
    CHECK(homogeneous(validate(p58, fig2)) ==
          sp(12, {{1, 4, 12}, {2, 3}, {5, 8, 9}, {6, 7}, {10, 11}}));

    SUBCASE("the highest path nests around label 1") {
        SetPartition mu = homogeneous(validate(p58, "NNNNNEEEEEEEE"));
        CHECK(is_noncrossing(mu));
        CHECK(mu.blocks().front().front() == 1);
    }
    SUBCASE("noncrossing and injective across small pairs") {
        for (const CoprimePair& p : coprime_pairs(13)) {
            std::set<SetPartition> image;
            for (const DyckPath& d : enumerate_paths(p)) {
                SetPartition mu = homogeneous(d);
                CHECK(is_noncrossing(mu));
                CHECK(!oracle::noncrossing_blocks(mu.blocks(), mu.ground_size()));
                image.insert(std::move(mu));
            }
            CHECK(BigInt(static_cast<long>(image.size())) == rational_catalan(p));
        }
    }
}

TEST_CASE("inhomogeneous partitions") {
    CHECK(inhomogeneous(validate(p58, fig2)) == sp(7, {{1, 2, 7}, {3, 4, 5}, {6}}));
    CHECK(inhomogeneous(validate(p58, "NNNEENNEEEEEE")) == sp(7, {{1, 2, 6, 7}, {3, 4, 5}}));

    SUBCASE("block count equals the vertical run count") {
        for (const CoprimePair& p : coprime_pairs(12))
            for (const DyckPath& d : enumerate_paths(p))
                CHECK(static_cast<long>(inhomogeneous(d).blocks().size()) ==
                      statistics(d).nontrivial_runs);
    }
    SUBCASE("injective across small pairs") {
        for (const CoprimePair& p : coprime_pairs(13)) {
            std::set<SetPartition> image;
            for (const DyckPath& d : enumerate_paths(p)) image.insert(inhomogeneous(d));
            CHECK(BigInt(static_cast<long>(image.size())) == rational_catalan(p));
        }
    }
}

TEST_CASE("region decomposition details") {
    DyckPath d = validate(p58, fig2);
    SUBCASE("valley lasers with east-step labels reproduce the worked example") {
        std::vector<Point> sources = statistics(d).valleys;
        std::vector<Point> labels;
        Point p;
        for (char c : fig2) {
            if (c == 'N') {
                ++p.y;
            } else {
                ++p.x;
                labels.push_back(p);
            }
        }
        labels.pop_back();
        CHECK(region_blocks(d, sources, labels) == sp(7, {{1, 2, 7}, {3, 4, 5}, {6}}));
    }
    SUBCASE("labels off the path are rejected") {
        CHECK_THROWS_AS(region_blocks(d, {}, {Point{3, 3}}), std::invalid_argument);
    }
    SUBCASE("labels out of path order are rejected") {
        CHECK_THROWS_AS(region_blocks(d, {}, {Point{2, 2}, Point{0, 1}}), std::invalid_argument);
    }
}

TEST_CASE("noncrossing covers") {
    SetPartition pi = sp(7, {{1, 2, 7}, {3, 4, 5}, {6}});
    std::vector<SetPartition> covers = nc_covers(pi);
    SetPartition merged = sp(7, {{1, 2, 6, 7}, {3, 4, 5}});
    CHECK(std::find(covers.begin(), covers.end(), merged) != covers.end());

    CHECK(nc_covers(sp(3, {{1}, {2}, {3}})).size() == 3);
    CHECK(nc_covers(sp(4, {{1, 2, 3, 4}})).empty());
    CHECK_THROWS_AS(nc_covers(sp(4, {{1, 3}, {2, 4}})), std::invalid_argument);

    SUBCASE("merging blocks that would cross is not a cover") {
        // merging {1,4} with {6} would cross {5,7}
        SetPartition q = sp(7, {{1, 4}, {2, 3}, {5, 7}, {6}});
        std::vector<SetPartition> qcovers = nc_covers(q);
        for (const SetPartition& c : qcovers) CHECK(is_noncrossing(c));
        SetPartition crossing = sp(7, {{1, 4, 6}, {2, 3}, {5, 7}});
        CHECK(std::find(qcovers.begin(), qcovers.end(), crossing) == qcovers.end());
    }
}

TEST_CASE("promotion corresponds to rotation") {
    for (auto [a, b] : std::vector<std::pair<long, long>>{{2, 3}, {3, 4}, {2, 5}, {3, 5}, {5, 8}}) {
        PromotionReport rep = verify_promotion_rotation(CoprimePair(a, b));
        CHECK(rep.ok);
    }
    SUBCASE("the (5,8) orbit census shows sizes 3, 6, and 12") {
        PromotionReport rep = verify_promotion_rotation(p58);
        CHECK(rep.orbit_census.count(3));
        CHECK(rep.orbit_census.count(6));
        CHECK(rep.orbit_census.count(12));
        long total = 0;
        for (auto [size, count] : rep.orbit_census) total += size * count;
        CHECK(total == 99);
    }
}

TEST_CASE("cyclic sieving") {
    SUBCASE("(2,3) fixed point counts are (2,0,2,0)") {
        CspReport rep = csp_check(CoprimePair(2, 3));
        CHECK(rep.ok);
        CHECK(rep.fuss);
        REQUIRE(rep.rows.size() == 4);
        BigInt expect[] = {2, 0, 2, 0};
        for (long d = 0; d < 4; ++d) {
            CHECK(rep.rows[d].fixed_points == expect[d]);
            CHECK(rep.rows[d].evaluation == expect[d]);
        }
    }
    SUBCASE("one path, all powers fixed") {
        CspReport rep = csp_check(CoprimePair(1, 5));
        CHECK(rep.ok);
        for (const auto& row : rep.rows) CHECK(row.fixed_points == 1);
    }
    SUBCASE("the classical matching case passes") {
        CHECK(csp_check(CoprimePair(3, 4)).ok);
        CHECK(csp_check(CoprimePair(2, 5)).ok);
        CHECK(csp_check(CoprimePair(3, 5)).ok);
    }
}

TEST_CASE("order filter property") {
    FilterReport rep = verify_order_filter(CoprimePair(3, 5));
    CHECK(rep.ok);
    CHECK(rep.image_size == 7);
    for (long n = 2; n <= 4; ++n) {
        FilterReport classical = verify_order_filter(CoprimePair(n, n + 1));
        CHECK(classical.ok);
        CHECK(BigInt(classical.image_size) == rational_catalan(CoprimePair(n, n + 1)));
    }
}

TEST_CASE("rotation closure probe") {
    for (long n = 2; n <= 4; ++n) {
        RotationProbe probe = probe_inhomogeneous_rotation(CoprimePair(n, n + 1));
        CHECK(probe.verified);
        std::set<long> image(probe.induced_permutation.begin(), probe.induced_permutation.end());
        CHECK(image.size() == probe.induced_permutation.size());  // a genuine permutation
    }
    CHECK(probe_inhomogeneous_rotation(CoprimePair(2, 5)).verified);
    CHECK(probe_inhomogeneous_rotation(CoprimePair(3, 7)).verified);
}

TEST_CASE("classical and fuss specializations") {
    SUBCASE("(3,4): noncrossing matchings of [6]") {
        std::set<std::vector<std::vector<int>>> image;
        for (const DyckPath& d : enumerate_paths(CoprimePair(3, 4)))
            image.insert(homogeneous(d).blocks());
        CHECK(image == oracle::noncrossing_matchings(6));
    }
    SUBCASE("(3,4): inhomogeneous images are NC(3)") {
        std::set<std::vector<std::vector<int>>> image;
        for (const DyckPath& d : enumerate_paths(CoprimePair(3, 4)))
            image.insert(inhomogeneous(d).blocks());
        CHECK(image == oracle::noncrossing_partitions(3));
    }
    SUBCASE("fuss block sizes") {
        for (auto [n, k] : std::vector<std::pair<long, long>>{{2, 2}, {3, 2}, {2, 3}}) {
            CoprimePair p(n, k * n + 1);
            for (const DyckPath& d : enumerate_paths(p)) {
                SetPartition mu = homogeneous(d), pi = inhomogeneous(d);
                for (const auto& blk : mu.blocks())
                    CHECK(static_cast<long>(blk.size()) == k + 1);
                for (const auto& blk : pi.blocks()) CHECK(blk.size() % k == 0);
            }
        }
    }
}

TEST_CASE("block minima sit on the north-step tops") {
    for (const CoprimePair& p : coprime_pairs(11)) {
        for (const DyckPath& d : enumerate_paths(p)) {
            SetPartition mu = homogeneous(d);
            std::vector<int> minima;
            for (const auto& b : mu.blocks()) minima.push_back(b.front());
            std::sort(minima.begin(), minima.end());
            std::vector<int> tops;
            for (long h = 1; h <= p.a(); ++h) tops.push_back(static_cast<int>(d.north_x(h) + h));
            std::sort(tops.begin(), tops.end());
            CHECK(minima == tops);
        }
    }
}
