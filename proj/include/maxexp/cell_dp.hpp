#ifndef MAXEXP_CELL_DP_HPP
#define MAXEXP_CELL_DP_HPP

#include <vector>

#include "maxexp/geometry.hpp"

namespace maxexp {

// Sentinel id for "no point yet" / "no range yet" slots in the sweep state.
// It stands for the artificial witnesses at the far side of the cell: a point
// contained in no range, and a zero-width range.
inline constexpr int kSentinel = -1;

enum class Anchor { Bottom, Top };

// A square cell. The two anchor lines are y = cell.y0 and y = cell.y1; the
// sweep runs from x = cell.x0 to x = cell.x1.
struct CellFrame {
    AxisRect cell;
};

CellFrame unit_frame();

// A range classified relative to a cell. Eligible ranges are axis-aligned
// squares with side >= the cell side that intersect the closed cell; within
// the cell such a range always occupies a corner rectangle, touching the left
// or right cell edge and the bottom or top cell edge.
struct ClassifiedRange {
    int range_id = 0;
    bool type1 = false;     // false: touches x = cell.x0 (ties go here); true: touches x = cell.x1 only
    Anchor anchor = Anchor::Bottom;  // bottom if the range crosses y = cell.y0 (ties to bottom)
    Rat x_begin, x_end;     // x-extent clipped to the cell
    Rat anchor_distance;    // vertical extent from the anchor line, clipped to the cell
};

// Classifies `ranges` (caller id + square) against the frame. Throws
// InputError for a non-square, a square smaller than the cell, or a square
// not intersecting the closed cell.
std::vector<ClassifiedRange> classify(const CellFrame& frame,
                                      const std::vector<std::pair<int, AxisRect>>& ranges);

// Distance of a point from an anchor line of the frame.
Rat point_anchor_distance(const CellFrame& frame, const Point& p, Anchor a);

// Returns whichever of q (index into `points`, or kSentinel) and p is closer
// to the anchor line. The sentinel loses to any real point; exact ties keep q.
int closer(const CellFrame& frame, const std::vector<Point>& points, int q, int p, Anchor a);

// Returns whichever of Q (index into `classified`, or kSentinel) and r is
// farther from the anchor line, considering r only when it is Type-1 and
// anchored to `a`. The sentinel (zero width) loses to any matching range;
// exact ties keep Q.
int farther(const CellFrame& frame, const std::vector<ClassifiedRange>& classified, int Q, int r,
            Anchor a);

// Sweep event: at equal x a range-begin precedes a point, remaining ties by id.
struct Event {
    Rat x;
    bool is_begin = false;  // true: Type-1 range begins; false: point
    int id = 0;             // local index
};

struct CellPoint {
    int id;  // caller's id, reported back in certificates
    Point pos;
};

struct CellRange {
    int id;  // caller's id
    AxisRect rect;
};

struct CellSolveResult {
    // best[b] = max points exposable with at most b deletions, 0 <= b <= kmax.
    std::vector<long> best;
    // Certificate per budget: deleted range ids (caller ids, sorted) realizing
    // best[b]; re-validated against exposure before being returned.
    std::vector<std::vector<int>> deleted;
    // exposed_points of the cell sub-instance under deleted[b] (caller ids).
    std::vector<std::vector<int>> exposed;
};

// Exact max-exposure inside one cell for every budget 0..kmax, by a memoized
// sweep over point and range-begin events. State: (event, budget, closest
// exposed point to each anchor line, farthest kept Type-1 range on each
// anchor line); the paper's forbidden-point and paid-range sets are
// reconstructed from that state at every step.
CellSolveResult solve_cell(const CellFrame& frame, const std::vector<CellPoint>& points,
                           const std::vector<CellRange>& ranges, int kmax);

// Test hook: walks random decision paths through the same transition code
// while tracking the true paid-range and forbidden-point sets explicitly, and
// checks they match the sets reconstructed from the compressed state.
// Returns the number of states checked; throws InternalError on mismatch.
long audit_cell_state_compression(const CellFrame& frame, const std::vector<CellPoint>& points,
                                  const std::vector<CellRange>& ranges, unsigned seed,
                                  int paths = 50);

}  // namespace maxexp

#endif
