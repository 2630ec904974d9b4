#include "maxexp/greedy.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "maxexp/cell_dp.hpp"
#include "maxexp/errors.hpp"

namespace maxexp {

BicriteriaSolution greedy_bicriteria(const Instance& inst, int alpha) {
    if (alpha < 1 || alpha > inst.k) throw InputError("alpha must satisfy 1 <= alpha <= k");

    auto filtered = remove_unexposable_points(inst);
    auto groups = group_by_signature(filtered.instance);

    BicriteriaSolution out;
    out.alpha = alpha;
    std::set<int> deleted;
    for (int i = 0; i < alpha && i < static_cast<int>(groups.size()); ++i) {
        Group g = groups[i];
        for (int& p : g.point_ids) p = filtered.kept_point_ids[p];  // back to original ids
        deleted.insert(g.signature.begin(), g.signature.end());
        out.groups_taken.push_back(std::move(g));
    }
    out.deleted.assign(deleted.begin(), deleted.end());
    out.exposed = exposed_points(inst, out.deleted);
    out.value = static_cast<long>(out.exposed.size());

    long taken = 0;
    for (const auto& g : out.groups_taken) taken += static_cast<long>(g.point_ids.size());
    if (out.value < taken) throw InternalError("recomputed exposure lost chosen group points");
    if (static_cast<int>(out.deleted.size()) > alpha * inst.k)
        throw InternalError("deleted more than alpha*k ranges");
    return out;
}

namespace {

// Square positions of side `s` covering [lo, hi] exactly: stride s from lo,
// with the last square pulled inward to end at hi.
std::vector<Rat> cover_positions(const Rat& lo, const Rat& hi, const Rat& s) {
    long count = ceil_rat(Rat((hi - lo) / s));
    if (count < 1) count = 1;
    std::vector<Rat> xs;
    xs.reserve(count);
    for (long i = 0; i + 1 < count; ++i) xs.push_back(Rat(lo + i * s));
    xs.push_back(Rat(hi - s));
    return xs;
}

SquarifyResult squarify_with_side(const Instance& inst,
                                  const std::vector<Rat>& side_per_range) {
    SquarifyResult out;
    out.instance.points = inst.points;
    out.instance.k = inst.k;
    out.cover.resize(inst.ranges.size());
    for (int r = 0; r < static_cast<int>(inst.ranges.size()); ++r) {
        const AxisRect* rect = as_rect(inst.ranges[r]);
        if (!rect) throw InputError("squarify needs rectangle ranges");
        const Rat& s = side_per_range[r];
        for (const Rat& x : cover_positions(rect->x0, rect->x1, s)) {
            for (const Rat& y : cover_positions(rect->y0, rect->y1, s)) {
                out.cover[r].push_back(static_cast<int>(out.instance.ranges.size()));
                out.instance.ranges.push_back(
                    Range{AxisRect{x, y, Rat(x + s), Rat(y + s)}});
            }
        }
    }
    if (out.instance.k > static_cast<int>(out.instance.ranges.size()))
        out.instance.k = static_cast<int>(out.instance.ranges.size());
    return out;
}

}  // namespace

SquarifyResult squarify_similar_fat(const Instance& inst) {
    Rat side(0);
    for (const auto& r : inst.ranges) {
        const AxisRect* rect = as_rect(r);
        if (!rect) throw InputError("squarify needs rectangle ranges");
        Rat s = std::min(rect->width(), rect->height());
        if (side == 0 || s < side) side = s;
    }
    std::vector<Rat> sides(inst.ranges.size(), side);
    return squarify_with_side(inst, sides);
}

SquarifyResult squarify_fat(const Instance& inst) {
    std::vector<Rat> sides;
    sides.reserve(inst.ranges.size());
    for (const auto& r : inst.ranges) {
        const AxisRect* rect = as_rect(r);
        if (!rect) throw InputError("squarify needs rectangle ranges");
        sides.push_back(std::min(rect->width(), rect->height()));
    }
    return squarify_with_side(inst, sides);
}

std::vector<int> assign_points_to_squares(const Instance& inst) {
    std::vector<Rat> side(inst.ranges.size());
    for (int r = 0; r < static_cast<int>(inst.ranges.size()); ++r) {
        const AxisRect* rect = as_rect(inst.ranges[r]);
        if (!rect || !is_square(*rect)) throw InputError("ranges must be squares");
        side[r] = rect->width();
    }

    std::vector<int> owner(inst.points.size(), -1);
    for (int p = 0; p < static_cast<int>(inst.points.size()); ++p) {
        for (int r = 0; r < static_cast<int>(inst.ranges.size()); ++r) {
            if (!contains(inst.ranges[r], inst.points[p])) continue;
            if (owner[p] == -1 || side[r] < side[owner[p]]) owner[p] = r;
        }
        if (owner[p] == -1) throw InputError("point lies in no square");
    }

    // Every range holding a point assigned to square R must be at least as
    // large as R and reach one of R's corners; this is what makes R usable as
    // a cell frame downstream. A violation means the assignment above is
    // broken, not the input.
    for (int p = 0; p < static_cast<int>(inst.points.size()); ++p) {
        const AxisRect& own = *as_rect(inst.ranges[owner[p]]);
        const Point corners[4] = {Point{own.x0, own.y0}, Point{own.x1, own.y0},
                                  Point{own.x0, own.y1}, Point{own.x1, own.y1}};
        for (int r = 0; r < static_cast<int>(inst.ranges.size()); ++r) {
            if (!contains(inst.ranges[r], inst.points[p])) continue;
            if (side[r] < side[owner[p]] ||
                (side[r] == side[owner[p]] && r < owner[p]))
                throw InternalError("assignment missed a smaller square");
            bool corner = false;
            for (const Point& c : corners)
                if (contains(inst.ranges[r], c)) {
                    corner = true;
                    break;
                }
            if (!corner) throw InternalError("assigned range avoids every owner corner");
        }
    }
    return owner;
}

BicriteriaSolution greedy_squares(const Instance& inst, int alpha) {
    if (alpha < 1 || alpha > inst.k) throw InputError("alpha must satisfy 1 <= alpha <= k");
    for (const auto& r : inst.ranges) {
        const AxisRect* rect = as_rect(r);
        if (!rect || !is_square(*rect)) throw InputError("ranges must be squares");
    }

    // Uncovered points are exposed for free; assignment runs on the rest.
    Instance covered;
    covered.ranges = inst.ranges;
    covered.k = inst.k;
    std::vector<int> covered_ids;
    for (int p = 0; p < static_cast<int>(inst.points.size()); ++p) {
        if (!signature_of(inst, p).empty()) {
            covered.points.push_back(inst.points[p]);
            covered_ids.push_back(p);
        }
    }
    std::vector<int> owner = assign_points_to_squares(covered);

    std::map<int, std::vector<int>> assigned;  // square id -> covered-point indices
    for (int cp = 0; cp < static_cast<int>(owner.size()); ++cp)
        assigned[owner[cp]].push_back(cp);

    struct LocalSolve {
        int square = 0;
        long value = 0;
        std::vector<int> deleted;
        std::vector<int> exposed;
    };
    std::vector<LocalSolve> locals;
    for (const auto& [square, pts] : assigned) {
        CellFrame frame{*as_rect(inst.ranges[square])};
        std::vector<CellPoint> cell_pts;
        for (int cp : pts) cell_pts.push_back(CellPoint{covered_ids[cp], covered.points[cp]});
        std::vector<CellRange> cell_rngs;
        for (int r = 0; r < static_cast<int>(inst.ranges.size()); ++r) {
            bool hits = false;
            for (int cp : pts)
                if (contains(inst.ranges[r], covered.points[cp])) {
                    hits = true;
                    break;
                }
            if (hits) cell_rngs.push_back(CellRange{r, *as_rect(inst.ranges[r])});
        }
        int kmax = std::min<int>(inst.k, static_cast<int>(cell_rngs.size()));
        auto res = solve_cell(frame, cell_pts, cell_rngs, kmax);
        locals.push_back(LocalSolve{square, res.best[kmax], res.deleted[kmax], res.exposed[kmax]});
    }

    std::sort(locals.begin(), locals.end(), [](const LocalSolve& a, const LocalSolve& b) {
        if (a.value != b.value) return a.value > b.value;
        return a.square < b.square;
    });

    BicriteriaSolution out;
    out.alpha = alpha;
    std::set<int> deleted;
    long taken = 0;
    for (int i = 0; i < alpha && i < static_cast<int>(locals.size()); ++i) {
        deleted.insert(locals[i].deleted.begin(), locals[i].deleted.end());
        taken += locals[i].value;
        out.groups_taken.push_back(Group{{locals[i].square}, locals[i].exposed});
    }
    out.deleted.assign(deleted.begin(), deleted.end());
    out.exposed = exposed_points(inst, out.deleted);
    out.value = static_cast<long>(out.exposed.size());
    if (out.value < taken) throw InternalError("recomputed exposure lost local solutions");
    if (static_cast<int>(out.deleted.size()) > alpha * inst.k)
        throw InternalError("deleted more than alpha*k squares");
    return out;
}

}  // namespace maxexp
