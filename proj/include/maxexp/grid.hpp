#ifndef MAXEXP_GRID_HPP
#define MAXEXP_GRID_HPP

#include <vector>

#include "maxexp/cell_dp.hpp"
#include "maxexp/geometry.hpp"

namespace maxexp {

// Default cap on the stacking parameter h for the exact h x h solver; the
// state space grows as (nm)^(h^2), so larger h fails loudly instead of
// thrashing.
inline constexpr int kDefaultStackLimit = 3;

// If every range is a translate of one rectangle, rescales so ranges become
// unit squares (x /= width, y /= height). Containment is unchanged, ids are
// preserved. Throws InputError otherwise.
Instance normalize_to_unit_squares(const Instance& inst);

// One occupied cell of the integer unit grid. Points on a grid line belong to
// the cell on their right/top, so the cells partition the points; range_ids
// lists the ranges containing at least one of the cell's points.
struct GridCell {
    long cx = 0, cy = 0;
    std::vector<int> point_ids;
    std::vector<int> range_ids;
};

// Occupied cells of the unit grid, sorted by (cx, cy). Expects unit squares.
std::vector<GridCell> decompose_unit_grid(const Instance& inst);

// Combine per-item value-vs-budget tables with one shared budget. locals[i][t]
// is the value of item i at budget t (saturating past the end of the table).
struct CombineResult {
    long value = 0;
    std::vector<int> spent;  // chosen budget per item, minimal among optima
};
CombineResult combine_budgets(const std::vector<std::vector<long>>& locals, int budget);

// 4-approximation scaffold: exact solve per occupied unit-grid cell for every
// budget, then a knapsack across cells. With budget 4k the result is at least
// the optimum at k. Ranges must be translates of one rectangle.
Solution dp_approx(const Instance& inst, int budget);

// --- flattening an h x h square into an h^2 x 1 slab ------------------------

struct FlatPoint {
    int original_point = 0;  // id in the source instance
    int column = 0;          // 1-based source column
    Point pos;               // slab coordinates: x in [0,1], y in [0, h^2+h-1]
};

// One piece of a range after column splitting. A range has at most one
// Type-0 and at most one Type-1 component; when both exist the Type-1 piece
// begins at the same slab x at which the Type-0 piece ends.
struct FlatComponent {
    int original_range = 0;
    bool type1 = false;
    int column = 0;
    Rat xlo, xhi, ylo, yhi;  // closed box in slab coordinates
};

struct FlattenedInstance {
    int h = 0;
    Point origin;  // lower-left corner of the source h x h square
    std::vector<FlatPoint> points;
    std::vector<FlatComponent> components;
};

// Shifts column i of the square [origin, origin + h]^2 by
// (-(i-1), (i-1)(h+1)): the columns stack vertically with a unit spacer row
// between consecutive stacks, so with closed containment no stack touches the
// next one. Ranges are clipped to the square first; every point of inst must
// lie inside the closed square and every range must be a unit square. The
// transform is exposure-preserving: deleting a set of ranges exposes the same
// points before and after.
FlattenedInstance flatten(const Instance& inst, int h, const Point& origin);

struct FlatSolveResult {
    std::vector<long> best;                 // best[b], 0 <= b <= kmax
    std::vector<std::vector<int>> deleted;  // original range ids per budget
};

// Exact max-exposure over a flattened h x h square for every budget up to
// kmax: the unit-cell sweep generalized to h^2+1 anchor lines, with each
// original range charged exactly once across its two components. Throws
// InfeasibleError when flat.h exceeds stack_limit.
FlatSolveResult dp_flattened(const FlattenedInstance& flat, int kmax,
                             int stack_limit = kDefaultStackLimit);

// Shifted-grid scheme: exposes at least the k-budget optimum using at most
// floor((1+epsilon)k) deletions, h = ceil(8/epsilon) capped by stack_limit.
Solution ptas_budget(const Instance& inst, int k, const Rat& epsilon,
                     int stack_limit = kDefaultStackLimit);

// Shifted-grid scheme that keeps the budget at exactly k and exposes at least
// (1-epsilon) of the optimum, h = ceil(4/epsilon); points within unit
// distance of a shifted grid line are discarded per shift.
Solution ptas_points(const Instance& inst, int k, const Rat& epsilon,
                     int stack_limit = kDefaultStackLimit);

}  // namespace maxexp

#endif
