#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "maxexp/errors.hpp"
#include "maxexp/geometry.hpp"
#include "support.hpp"

using namespace maxexp;
using testsupport::i1;

TEST_CASE("rational parsing is exact and round-trips") {
    CHECK(parse_rat("1/3") == Rat(1, 3));
    CHECK(parse_rat("-2/6") == Rat(-1, 3));
    CHECK(parse_rat("0.125") == Rat(1, 8));
    CHECK(parse_rat("-0.2") == Rat(-1, 5));
    CHECK(parse_rat("7") == Rat(7));
    CHECK(rat_to_string(Rat(3, 7)) == "3/7");
    CHECK(rat_to_string(Rat(-4)) == "-4");
    CHECK(parse_rat(rat_to_string(Rat(22, 7))) == Rat(22, 7));
    CHECK(floor_rat(Rat(-1, 2)) == -1);
    CHECK(floor_rat(Rat(5, 2)) == 2);
    CHECK(floor_rat(Rat(3)) == 3);
    CHECK_THROWS_AS(parse_rat("1/0"), InputError);
    CHECK_THROWS_AS(parse_rat("abc"), InputError);
    CHECK_THROWS_AS(parse_rat("1.2.3"), InputError);
}

TEST_CASE("contains is closed and exact") {
    Range rect{AxisRect{Rat(0), Rat(0), Rat(1), Rat(1)}};
    CHECK(contains(rect, Point{Rat(1, 2), Rat(1, 2)}));
    CHECK(contains(rect, Point{Rat(1), Rat(1)}));  // corner counts
    CHECK(contains(rect, Point{Rat(0), Rat(1, 2)}));
    CHECK_FALSE(contains(rect, Point{Rat(1) + Rat(1, 1000000), Rat(1, 2)}));

    Range disk{Disk{Rat(0), Rat(0), Rat(1)}};
    CHECK_FALSE(contains(disk, Point{Rat(1), Rat(1)}));  // distance^2 = 2 > 1
    CHECK(contains(disk, Point{Rat(1), Rat(0)}));        // boundary
    CHECK(contains(disk, Point{Rat(3, 5), Rat(4, 5)}));  // exactly on the circle

    Range tri{ConvexPolygon{{Point{Rat(0), Rat(0)}, Point{Rat(2), Rat(0)}, Point{Rat(1), Rat(2)}}}};
    CHECK(contains(tri, Point{Rat(1), Rat(2)}));  // vertex on the closed boundary
    CHECK(contains(tri, Point{Rat(1), Rat(1)}));
    CHECK(contains(tri, Point{Rat(1), Rat(0)}));  // edge
    CHECK_FALSE(contains(tri, Point{Rat(2), Rat(2)}));
}

TEST_CASE("range validation") {
    CHECK_THROWS_AS(validate_range(Range{AxisRect{Rat(1), Rat(0), Rat(0), Rat(1)}}), InputError);
    CHECK_THROWS_AS(validate_range(Range{Disk{Rat(0), Rat(0), Rat(0)}}), InputError);
    // clockwise triangle rejected
    CHECK_THROWS_AS(
        validate_range(Range{ConvexPolygon{
            {Point{Rat(0), Rat(0)}, Point{Rat(1), Rat(2)}, Point{Rat(2), Rat(0)}}}}),
        InputError);
    // repeated vertex rejected
    CHECK_THROWS_AS(
        validate_range(Range{ConvexPolygon{
            {Point{Rat(0), Rat(0)}, Point{Rat(0), Rat(0)}, Point{Rat(1), Rat(2)}}}}),
        InputError);
    CHECK_NOTHROW(validate_instance(i1()));
}

TEST_CASE("signatures on the worked instance") {
    Instance inst = i1();
    CHECK(signature_of(inst, 0) == Signature{0});
    CHECK(signature_of(inst, 1) == Signature{0, 1});
    CHECK(signature_of(inst, 2) == Signature{1});
    CHECK(signature_of(inst, 3) == Signature{});
    CHECK_THROWS_AS(signature_of(inst, 4), InputError);
    CHECK_THROWS_AS(signature_of(inst, -1), InputError);
}

TEST_CASE("points_in on the worked instance") {
    Instance inst = i1();
    CHECK(points_in(inst, 0) == std::vector<int>{0, 1});
    CHECK(points_in(inst, 1) == std::vector<int>{1, 2});
    CHECK_THROWS_AS(points_in(inst, 2), InputError);

    Instance empty = inst;
    empty.points.clear();
    CHECK(points_in(empty, 0).empty());
}

TEST_CASE("exposed_points on the worked instance") {
    Instance inst = i1();
    CHECK(exposed_points(inst, {}) == std::vector<int>{3});
    CHECK(exposed_points(inst, {0}) == std::vector<int>{0, 3});
    CHECK(exposed_points(inst, {0, 1}) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("group_by_signature ordering and exclusions") {
    Instance inst = i1();
    auto groups = group_by_signature(inst);
    REQUIRE(groups.size() == 3);
    // All size 1, so ties resolve to lexicographically smaller signatures.
    CHECK(groups[0].signature == Signature{0});
    CHECK(groups[0].point_ids == std::vector<int>{0});
    CHECK(groups[1].signature == Signature{0, 1});
    CHECK(groups[2].signature == Signature{1});

    Instance single;
    single.points = {Point{Rat(0), Rat(0)}, Point{Rat(1, 2), Rat(1, 2)}};
    single.ranges = {Range{AxisRect{Rat(-1), Rat(-1), Rat(1), Rat(1)}}};
    single.k = 1;
    auto g1 = group_by_signature(single);
    REQUIRE(g1.size() == 1);
    CHECK(g1[0].point_ids == std::vector<int>{0, 1});

    Instance none;
    none.ranges = single.ranges;
    none.k = 1;
    CHECK(group_by_signature(none).empty());
}

TEST_CASE("remove_unexposable_points") {
    Instance inst = i1();  // k = 1, p1 sits in two ranges
    auto filtered = remove_unexposable_points(inst);
    CHECK(filtered.instance.points.size() == 3);
    CHECK(filtered.kept_point_ids == std::vector<int>{0, 2, 3});
    CHECK(filtered.old_to_new == std::vector<int>{0, -1, 1, 2});
    CHECK(filtered.instance.k == 1);
    CHECK(filtered.instance.ranges.size() == 2);

    inst.k = 2;  // now every signature fits: identity
    auto id = remove_unexposable_points(inst);
    CHECK(id.instance.points.size() == 4);
    CHECK(id.old_to_new == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("exposure is monotone and matches the signature definition") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 60; ++iter) {
        Instance inst = testsupport::random_rect_instance(rng, 5, 8, 2, 3);
        auto sigs = all_signatures(inst);

        std::vector<int> d1, d2;
        for (int r = 0; r < 5; ++r) {
            if (rng() % 2) d1.push_back(r);
        }
        d2 = d1;
        for (int r = 0; r < 5; ++r)
            if (rng() % 2) d2.push_back(r);
        std::sort(d2.begin(), d2.end());
        d2.erase(std::unique(d2.begin(), d2.end()), d2.end());

        auto e1 = exposed_points(inst, d1);
        // definition check: p exposed iff signature(p) subset of deleted
        for (int p = 0; p < 8; ++p) {
            bool in = std::binary_search(e1.begin(), e1.end(), p);
            bool subset = std::includes(d1.begin(), d1.end(), sigs[p].begin(), sigs[p].end());
            CHECK(in == subset);
        }
        // monotone in the deleted set
        auto e2 = exposed_points(inst, d2);
        CHECK(std::includes(e2.begin(), e2.end(), e1.begin(), e1.end()));
    }
}

TEST_CASE("groups partition the covered points with distinct signatures") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 40; ++iter) {
        Instance inst = testsupport::random_rect_instance(rng, 4, 9, 2, 3);
        auto groups = group_by_signature(inst);
        std::vector<int> seen;
        for (std::size_t i = 0; i < groups.size(); ++i) {
            CHECK(!groups[i].point_ids.empty());
            CHECK(!groups[i].signature.empty());
            for (int p : groups[i].point_ids) {
                CHECK(signature_of(inst, p) == groups[i].signature);
                seen.push_back(p);
            }
            for (std::size_t j = i + 1; j < groups.size(); ++j)
                CHECK(groups[i].signature != groups[j].signature);
        }
        std::sort(seen.begin(), seen.end());
        std::vector<int> covered;
        for (int p = 0; p < 9; ++p)
            if (!signature_of(inst, p).empty()) covered.push_back(p);
        CHECK(seen == covered);
    }
}

TEST_CASE("contains is scale invariant") {
    std::mt19937 rng(13);
    for (int iter = 0; iter < 25; ++iter) {
        Instance inst = testsupport::random_rect_instance(rng, 4, 6, 2, 3);
        inst.ranges.push_back(Range{Disk{Rat(1), Rat(1), Rat(3, 2)}});
        inst.ranges.push_back(Range{ConvexPolygon{
            {Point{Rat(0), Rat(0)}, Point{Rat(3), Rat(1, 2)}, Point{Rat(1), Rat(3)}}}});
        Rat scale(3, 7);

        Instance scaled = inst;
        for (auto& p : scaled.points) {
            p.x *= scale;
            p.y *= scale;
        }
        for (auto& r : scaled.ranges) {
            if (auto* rect = std::get_if<AxisRect>(&r.shape)) {
                rect->x0 *= scale;
                rect->y0 *= scale;
                rect->x1 *= scale;
                rect->y1 *= scale;
            } else if (auto* disk = std::get_if<Disk>(&r.shape)) {
                disk->cx *= scale;
                disk->cy *= scale;
                disk->r *= scale;
            } else {
                for (auto& v : std::get<ConvexPolygon>(r.shape).vertices) {
                    v.x *= scale;
                    v.y *= scale;
                }
            }
        }
        for (std::size_t p = 0; p < inst.points.size(); ++p)
            for (std::size_t r = 0; r < inst.ranges.size(); ++r)
                CHECK(contains(inst.ranges[r], inst.points[p]) ==
                      contains(scaled.ranges[r], scaled.points[p]));
    }
}

TEST_CASE("solution construction recomputes exposure") {
    Instance inst = i1();
    Solution s = make_solution(inst, {1, 0, 1});
    CHECK(s.deleted == std::vector<int>{0, 1});
    CHECK(s.exposed == std::vector<int>{0, 1, 2, 3});
    CHECK(s.value == 4);
}
