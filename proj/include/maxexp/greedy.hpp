#ifndef MAXEXP_GREEDY_HPP
#define MAXEXP_GREEDY_HPP

#include <vector>

#include "maxexp/geometry.hpp"

namespace maxexp {

// Output of the bicriteria algorithms. Exposure is recomputed from the final
// deleted set over the whole instance, so value can exceed the sum of the
// chosen group sizes but never falls below it.
struct BicriteriaSolution {
    std::vector<int> deleted;  // sorted range ids, |deleted| <= alpha * k
    std::vector<int> exposed;  // sorted point ids
    long value = 0;
    int alpha = 0;
    std::vector<Group> groups_taken;
};

// Group points by signature, delete every range of the alpha largest groups,
// recompute exposure. Points lying in more than k ranges are dropped first
// (they are unexposable within the budget). Requires 1 <= alpha <= inst.k.
BicriteriaSolution greedy_bicriteria(const Instance& inst, int alpha);

// A squarified instance plus the map from each original range to the squares
// that replace it. The squares of one range cover exactly its area (the last
// row/column is pulled inward, so squares may overlap).
struct SquarifyResult {
    Instance instance;
    std::vector<std::vector<int>> cover;  // original range id -> new range ids
};

// Replace every rectangle by squares whose side is the smallest side found in
// the whole range set (for ranges whose largest/smallest side ratio is a
// constant c this is at most ceil(c)^2 squares per range).
SquarifyResult squarify_similar_fat(const Instance& inst);

// Replace every rectangle by at most ceil(aspect) squares whose side is that
// rectangle's own smaller side, laid along its longer side.
SquarifyResult squarify_fat(const Instance& inst);

// owner[p] = the smallest square containing point p, ties to the smaller
// range id. Requires all ranges to be squares and every point to lie in at
// least one (callers peel off uncovered points first). Verifies that every
// range containing an assigned point of a square is at least as large and
// reaches a corner of it, which is what lets the cell solver run on the
// owner square as its frame.
std::vector<int> assign_points_to_squares(const Instance& inst);

// Per owner square, solve max-exposure of its assigned points exactly within
// the square (every involved range behaves as a corner rectangle there); keep
// the alpha best local solutions and delete the union of their choices.
// Requires all-square ranges and 1 <= alpha <= inst.k.
BicriteriaSolution greedy_squares(const Instance& inst, int alpha);

}  // namespace maxexp

#endif
