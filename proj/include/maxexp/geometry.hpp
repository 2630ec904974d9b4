#ifndef MAXEXP_GEOMETRY_HPP
#define MAXEXP_GEOMETRY_HPP

#include <optional>
#include <variant>
#include <vector>

#include "maxexp/rational.hpp"

namespace maxexp {

struct Point {
    Rat x;
    Rat y;
    bool operator==(const Point&) const = default;
};

// Closed axis-aligned rectangle [x0,x1] x [y0,y1], x0 < x1, y0 < y1.
struct AxisRect {
    Rat x0, y0, x1, y1;
    bool operator==(const AxisRect&) const = default;
    Rat width() const { return x1 - x0; }
    Rat height() const { return y1 - y0; }
};

// Closed disk, r > 0.
struct Disk {
    Rat cx, cy, r;
    bool operator==(const Disk&) const = default;
};

// Strictly convex, counter-clockwise, >= 3 distinct vertices.
struct ConvexPolygon {
    std::vector<Point> vertices;
    bool operator==(const ConvexPolygon&) const = default;
};

using Shape = std::variant<AxisRect, Disk, ConvexPolygon>;

struct Range {
    Shape shape;
    bool operator==(const Range&) const = default;
};

// The problem input: m points, n ranges, deletion budget k (0 <= k <= n).
// Point and range indices are stable identities used by every solver.
struct Instance {
    std::vector<Point> points;
    std::vector<Range> ranges;
    int k = 0;
};

// Sorted, duplicate-free list of range indices; set equality is ==.
using Signature = std::vector<int>;

// Maximal equivalence class of points sharing one (non-empty) signature.
struct Group {
    Signature signature;
    std::vector<int> point_ids;
};

// A certified output: value == |exposed| and exposed is exactly the set of
// points whose signature is covered by `deleted`. Build via make_solution so
// the invariant holds by construction.
struct Solution {
    std::vector<int> deleted;  // sorted range ids
    std::vector<int> exposed;  // sorted point ids
    long value = 0;
};

// --- validation -----------------------------------------------------------

// Throws InputError if a type invariant is violated.
void validate_range(const Range& r);
void validate_instance(const Instance& inst);

// 2*signed area of triangle (a,b,c); > 0 iff counter-clockwise.
Rat cross2(const Point& a, const Point& b, const Point& c);

// --- core predicates and exposure semantics --------------------------------

// True iff p lies in the CLOSED region of r. Exact, no tolerance.
bool contains(const Range& r, const Point& p);

// Sorted list of exactly the ranges containing the point.
Signature signature_of(const Instance& inst, int point_id);

// All signatures at once (index = point id).
std::vector<Signature> all_signatures(const Instance& inst);

// Points contained in the range, ascending ids.
std::vector<int> points_in(const Instance& inst, int range_id);

// Point ids whose signature is a subset of `deleted` (sorted ids in, sorted
// ids out). A point in no range is always exposed.
std::vector<int> exposed_points(const Instance& inst, const std::vector<int>& deleted);

// Partition of the points with NON-empty signature into signature classes,
// sorted by decreasing class size, ties by lexicographically smaller
// signature. Points in no range are excluded (callers treat them as exposed
// for free).
std::vector<Group> group_by_signature(const Instance& inst);

// Result of remove_unexposable_points: the reduced instance plus the id map.
struct FilteredInstance {
    Instance instance;
    std::vector<int> kept_point_ids;      // new point id -> old point id
    std::vector<int> old_to_new;          // old point id -> new id, or -1 if dropped
};

// Drops every point contained in more than inst.k ranges (such a point can
// never be exposed by k deletions). Ranges and k are unchanged.
FilteredInstance remove_unexposable_points(const Instance& inst);

// Solution with exposure recomputed from `deleted` (deduplicated, sorted).
Solution make_solution(const Instance& inst, std::vector<int> deleted);

// --- small shape helpers shared by the solvers -----------------------------

const AxisRect* as_rect(const Range& r);
bool is_square(const AxisRect& r);
// All ranges are axis rects with equal width and equal height; returns that
// common size, or nullopt.
std::optional<std::pair<Rat, Rat>> common_rect_size(const Instance& inst);

}  // namespace maxexp

#endif
