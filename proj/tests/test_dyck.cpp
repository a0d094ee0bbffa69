#include <doctest.h>

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "ratcat/dyck.hpp"

using namespace ratcat;

namespace {

const CoprimePair p58(5, 8);
const std::string fig2 = "NNEENNEEENEEE";  // the running (5,8) example

std::vector<CoprimePair> coprime_pairs(long max_sum) {
    std::vector<CoprimePair> out;
    for (long s = 3; s <= max_sum; ++s)
        for (long a = 1; 2 * a < s; ++a)
            if (std::gcd(a, s - a) == 1) out.emplace_back(a, s - a);
    return out;
}

}  // namespace

TEST_CASE("path validation") {
    CHECK_NOTHROW(validate(CoprimePair(2, 3), "NNEEE"));
    CHECK_NOTHROW(validate(p58, fig2));
    CHECK_THROWS_AS(validate(CoprimePair(2, 3), "NNEE"), wrong_step_counts);
    CHECK_THROWS_AS(validate(CoprimePair(2, 3), "NNEEX"), wrong_step_counts);
    SUBCASE("the first offending point is reported") {
        try {
            validate(CoprimePair(2, 3), "NEEEN");
            FAIL("expected below_diagonal");
        } catch (const below_diagonal& e) {
            // walking N,E,E,E,N the prefix point (2,1) already has 3*1 <= 2*2
            CHECK(e.where == Point{2, 1});
        }
    }
    SUBCASE("every prefix is checked, not just the endpoint") {
        CHECK_THROWS_AS(validate(CoprimePair(2, 3), "NEENE"), below_diagonal);
    }
}

TEST_CASE("partition encoding") {
    DyckPath d = validate(p58, fig2);
    CHECK(to_partition(d) == std::vector<long>{5, 2, 2, 0});
    CHECK(from_partition(p58, {5, 2, 2, 0}) == d);
    CHECK(from_partition(p58, {}) == validate(p58, "NNNNNEEEEEEEE"));
    CHECK(from_partition(CoprimePair(3, 5), {3, 1}) == validate(CoprimePair(3, 5), "NENEENEE"));

    SUBCASE("bounds are enforced") {
        CHECK_THROWS_AS(from_partition(p58, {7, 0, 0, 0}), std::invalid_argument);
        CHECK_THROWS_AS(from_partition(p58, {2, 3, 0, 0}), std::invalid_argument);
        CHECK_THROWS_AS(from_partition(p58, {1, 1, 1, 1, 1}), std::invalid_argument);
    }
    SUBCASE("round trip across the enumeration") {
        for (const CoprimePair& p : coprime_pairs(11))
            for (const DyckPath& d : enumerate_paths(p))
                CHECK(from_partition(p, to_partition(d)) == d);
    }
}

TEST_CASE("enumeration agrees with brute force") {
    for (const CoprimePair& p : coprime_pairs(11)) {
        std::vector<std::string> expect = oracle::brute_paths(p.a(), p.b());
        std::set<std::string> got;
        for (const DyckPath& d : enumerate_paths(p)) got.insert(d.word());
        CHECK(got == std::set<std::string>(expect.begin(), expect.end()));
        CHECK(got.size() == expect.size());
    }
    CHECK(enumerate_paths(CoprimePair(2, 3)).size() == 2);
    CHECK(enumerate_paths(CoprimePair(1, 9)).size() == 1);
    CHECK(enumerate_paths(p58).size() == 99);
}

TEST_CASE("enumeration is in lexicographic partition order") {
    CoprimePair p(3, 5);
    std::vector<std::vector<long>> seen;
    for (const DyckPath& d : enumerate_paths(p)) seen.push_back(to_partition(d));
    std::vector<std::vector<long>> expect = {{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {3, 0}, {3, 1}};
    CHECK(seen == expect);
}

TEST_CASE("run words") {
    DyckPath d = validate(p58, fig2);
    RunWord x = run_word(d, RunWord::Kind::vertical);
    RunWord y = run_word(d, RunWord::Kind::horizontal);
    CHECK(x.letters == std::vector<long>{2, 0, 2, 0, 0, 1, 0, 0});
    CHECK(y.letters == std::vector<long>{3, 3, 0, 2, 0});
    CHECK(from_run_word(p58, x) == d);
    CHECK(from_run_word(p58, y) == d);

    DyckPath high = from_partition(CoprimePair(3, 7), {});
    CHECK(run_word(high, RunWord::Kind::vertical).letters ==
          std::vector<long>{3, 0, 0, 0, 0, 0, 0});

    SUBCASE("inverses reject bad words") {
        // sums fine, but the walk starts with an east step
        CHECK_THROWS_AS(from_run_word(p58, RunWord{RunWord::Kind::vertical, {0, 5, 0, 0, 0, 0, 0, 0}}),
                        below_diagonal);
        CHECK_THROWS_AS(from_run_word(p58, RunWord{RunWord::Kind::vertical, {4, 0, 0, 0, 0, 0, 0, 0}}),
                        std::invalid_argument);
        CHECK_THROWS_AS(from_run_word(p58, RunWord{RunWord::Kind::vertical, {2, 2, 2}}),
                        std::invalid_argument);
    }
    SUBCASE("round trips across the enumeration") {
        for (const CoprimePair& p : coprime_pairs(11))
            for (const DyckPath& d : enumerate_paths(p)) {
                CHECK(from_run_word(p, run_word(d, RunWord::Kind::vertical)) == d);
                CHECK(from_run_word(p, run_word(d, RunWord::Kind::horizontal)) == d);
            }
    }
}

TEST_CASE("cycle rectification") {
    CoprimePair p(2, 3);
    auto [d, offset] = cycle_rectify(p, {0, 2, 0});
    CHECK(d.word() == "NNEEE");
    CHECK(offset == 1);

    auto [d2, offset2] = cycle_rectify(p, {2, 0, 0});
    CHECK(offset2 == 0);
    CHECK(d2.word() == "NNEEE");

    SUBCASE("brute check of the three conjugates") {
        long valid = 0;
        std::vector<long> w = {0, 2, 0};
        for (long o = 0; o < 3; ++o) {
            std::string s;
            for (long i = 0; i < 3; ++i) {
                s.append(w[(o + i) % 3], 'N');
                s += 'E';
            }
            try {
                validate(p, s);
                ++valid;
            } catch (const std::invalid_argument&) {
            }
        }
        CHECK(valid == 1);
    }
    CHECK_THROWS_AS(cycle_rectify(p, {1, 1, 1}), std::invalid_argument);  // wrong sum
    CHECK_THROWS_AS(cycle_rectify(p, {2, 0}), std::invalid_argument);     // wrong length
}

TEST_CASE("path statistics") {
    DyckPath d = validate(p58, fig2);
    PathStatistics st = statistics(d);
    CHECK(st.valleys == std::vector<Point>{{2, 2}, {5, 4}});
    CHECK(st.north_bottoms == std::vector<Point>{{0, 1}, {2, 2}, {2, 3}, {5, 4}});
    CHECK(st.run_type.entries() == std::vector<long>{5, 1, 2, 0, 0, 0});
    CHECK(st.nontrivial_runs == 3);

    DyckPath high = from_partition(p58, {});
    PathStatistics hst = statistics(high);
    CHECK(hst.valleys.empty());
    CHECK(hst.nontrivial_runs == 1);
    CHECK(hst.north_bottoms.size() == 4);  // a-1 of them, all on the left edge
}

TEST_CASE("laser geometry") {
    DyckPath d = validate(p58, fig2);

    Laser l1 = fire_laser(d, {0, 1});
    CHECK(l1.end_x_num == 8);  // 8/5
    CHECK(l1.end_height == 2);
    CHECK(l1.hit_step_right_end == Point{2, 2});

    Laser l2 = fire_laser(d, {2, 3});
    CHECK(l2.end_x_num == 18);  // 18/5
    CHECK(l2.end_height == 4);
    CHECK(l2.hit_step_right_end == Point{4, 4});

    DyckPath small = validate(CoprimePair(2, 3), "NNEEE");
    Laser l3 = fire_laser(small, {0, 1});
    CHECK(l3.end_x_num == 3);  // 3/2
    CHECK(l3.end_height == 2);
    CHECK(l3.hit_step_right_end == Point{2, 2});

    SUBCASE("sources are validated") {
        CHECK_THROWS_AS(fire_laser(d, {0, 0}), not_a_laser_source);
        CHECK_THROWS_AS(fire_laser(d, {1, 2}), not_a_laser_source);  // east-run interior
        CHECK_THROWS_AS(fire_laser(d, {3, 3}), not_a_laser_source);  // off the path
    }
    SUBCASE("endpoints never hit lattice points, intercepts never repeat") {
        for (const CoprimePair& p : coprime_pairs(11)) {
            if (p.a() == 1) continue;
            for (const DyckPath& d : enumerate_paths(p)) {
                std::set<long> intercepts;
                for (const Point& s : statistics(d).north_bottoms) {
                    Laser l = fire_laser(d, s);
                    CHECK(l.end_x_num % p.a() != 0);
                    CHECK(intercepts.insert(l.intercept(p)).second);
                }
            }
        }
    }
}

TEST_CASE("promotion") {
    CoprimePair p(2, 3);
    DyckPath high = validate(p, "NNEEE"), low = validate(p, "NENEE");
    CHECK(promote(high) == low);
    CHECK(promote(low) == high);

    SUBCASE("order divides a+b-1 across the enumeration") {
        for (const CoprimePair& q : coprime_pairs(11)) {
            long m = q.a() + q.b() - 1;
            for (const DyckPath& d : enumerate_paths(q)) {
                DyckPath cur = d;
                for (long i = 0; i < m; ++i) cur = promote(cur);
                CHECK(cur == d);
            }
        }
    }
    SUBCASE("promotion permutes the (5,8) enumeration") {
        std::set<std::string> image;
        for (const DyckPath& d : enumerate_paths(p58)) image.insert(promote(d).word());
        CHECK(image.size() == 99);
    }
}
