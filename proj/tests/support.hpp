#ifndef MAXEXP_TESTS_SUPPORT_HPP
#define MAXEXP_TESTS_SUPPORT_HPP

#include <random>

#include "maxexp/geometry.hpp"

namespace maxexp::testsupport {

// Four points, two overlapping unit squares, k = 1. Worked through by hand in
// the unit tests: signatures are p0:{R0}, p1:{R0,R1}, p2:{R1}, p3:{}.
inline Instance i1() {
    Instance inst;
    inst.points = {
        Point{Rat(1, 5), Rat(1, 2)},
        Point{Rat(9, 20), Rat(1, 2)},
        Point{Rat(7, 10), Rat(9, 10)},
        Point{Rat(9, 10), Rat(1, 10)},
    };
    inst.ranges = {
        Range{AxisRect{Rat(-1, 2), Rat(-1, 5), Rat(1, 2), Rat(4, 5)}},
        Range{AxisRect{Rat(2, 5), Rat(3, 10), Rat(7, 5), Rat(13, 10)}},
    };
    inst.k = 1;
    return inst;
}

// Uniform rational on the grid {lo_num, .., hi_num} / den. Small denominators
// make boundary coincidences likely, which is what the exact predicates and
// the sweep tie rules need to be exercised against.
inline Rat rand_rat(std::mt19937& rng, long lo_num, long hi_num, long den) {
    std::uniform_int_distribution<long> d(lo_num, hi_num);
    return make_rat(d(rng), den);
}

// Points inside the closed unit cell, unit squares that all intersect it.
inline Instance random_unit_cell_instance(std::mt19937& rng, int n, int m, int k, long den = 8) {
    Instance inst;
    inst.k = k;
    for (int i = 0; i < m; ++i)
        inst.points.push_back(Point{rand_rat(rng, 0, den, den), rand_rat(rng, 0, den, den)});
    for (int i = 0; i < n; ++i) {
        Rat x = rand_rat(rng, -den, den, den);
        Rat y = rand_rat(rng, -den, den, den);
        inst.ranges.push_back(Range{AxisRect{x, y, x + 1, y + 1}});
    }
    return inst;
}

// Unit squares and points spread over [0, span]^2.
inline Instance random_unit_square_instance(std::mt19937& rng, int n, int m, int k, long span,
                                            long den = 4) {
    Instance inst;
    inst.k = k;
    for (int i = 0; i < m; ++i)
        inst.points.push_back(
            Point{rand_rat(rng, 0, span * den, den), rand_rat(rng, 0, span * den, den)});
    for (int i = 0; i < n; ++i) {
        Rat x = rand_rat(rng, -den, span * den, den);
        Rat y = rand_rat(rng, -den, span * den, den);
        inst.ranges.push_back(Range{AxisRect{x, y, x + 1, y + 1}});
    }
    return inst;
}

// Arbitrary axis rectangles over [0, span]^2.
inline Instance random_rect_instance(std::mt19937& rng, int n, int m, int k, long span,
                                     long den = 4) {
    Instance inst;
    inst.k = k;
    for (int i = 0; i < m; ++i)
        inst.points.push_back(
            Point{rand_rat(rng, 0, span * den, den), rand_rat(rng, 0, span * den, den)});
    for (int i = 0; i < n; ++i) {
        Rat x0 = rand_rat(rng, -den, span * den, den);
        Rat y0 = rand_rat(rng, -den, span * den, den);
        Rat w = rand_rat(rng, 1, 2 * den, den);
        Rat h = rand_rat(rng, 1, 2 * den, den);
        inst.ranges.push_back(Range{AxisRect{x0, y0, x0 + w, y0 + h}});
    }
    return inst;
}

// Axis squares of mixed sizes over [0, span]^2.
inline Instance random_square_instance(std::mt19937& rng, int n, int m, int k, long span,
                                       long den = 4) {
    Instance inst;
    inst.k = k;
    for (int i = 0; i < m; ++i)
        inst.points.push_back(
            Point{rand_rat(rng, 0, span * den, den), rand_rat(rng, 0, span * den, den)});
    for (int i = 0; i < n; ++i) {
        Rat x0 = rand_rat(rng, -den, span * den, den);
        Rat y0 = rand_rat(rng, -den, span * den, den);
        Rat s = rand_rat(rng, 1, 2 * den, den);
        inst.ranges.push_back(Range{AxisRect{x0, y0, x0 + s, y0 + s}});
    }
    return inst;
}

}  // namespace maxexp::testsupport

#endif
