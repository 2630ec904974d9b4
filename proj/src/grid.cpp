#include "maxexp/grid.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <unordered_map>

#include "maxexp/errors.hpp"

namespace maxexp {

Instance normalize_to_unit_squares(const Instance& inst) {
    auto size = common_rect_size(inst);
    if (!size) throw InputError("ranges are not translates of a single rectangle");
    auto [w, h] = *size;
    Instance out;
    out.k = inst.k;
    out.points.reserve(inst.points.size());
    for (const auto& p : inst.points) out.points.push_back(Point{Rat(p.x / w), Rat(p.y / h)});
    out.ranges.reserve(inst.ranges.size());
    for (const auto& r : inst.ranges) {
        const AxisRect& a = *as_rect(r);
        out.ranges.push_back(
            Range{AxisRect{Rat(a.x0 / w), Rat(a.y0 / h), Rat(a.x1 / w), Rat(a.y1 / h)}});
    }
    return out;
}

std::vector<GridCell> decompose_unit_grid(const Instance& inst) {
    auto size = common_rect_size(inst);
    if (!size || size->first != 1 || size->second != 1)
        throw InputError("unit grid decomposition needs unit-square ranges");

    std::map<std::pair<long, long>, GridCell> cells;
    for (int p = 0; p < static_cast<int>(inst.points.size()); ++p) {
        long cx = floor_rat(inst.points[p].x);
        long cy = floor_rat(inst.points[p].y);
        auto& cell = cells[{cx, cy}];
        cell.cx = cx;
        cell.cy = cy;
        cell.point_ids.push_back(p);
    }
    for (auto& [key, cell] : cells) {
        for (int r = 0; r < static_cast<int>(inst.ranges.size()); ++r) {
            for (int p : cell.point_ids)
                if (contains(inst.ranges[r], inst.points[p])) {
                    cell.range_ids.push_back(r);
                    break;
                }
        }
    }
    std::vector<GridCell> out;
    out.reserve(cells.size());
    for (auto& [key, cell] : cells) out.push_back(std::move(cell));
    return out;
}

CombineResult combine_budgets(const std::vector<std::vector<long>>& locals, int budget) {
    const int n = static_cast<int>(locals.size());
    for (const auto& l : locals)
        if (l.empty()) throw InputError("empty local table");
    std::vector<std::vector<long>> dp(n + 1, std::vector<long>(budget + 1, 0));
    for (int i = n - 1; i >= 0; --i) {
        for (int b = 0; b <= budget; ++b) {
            const int tmax = std::min<int>(b, static_cast<int>(locals[i].size()) - 1);
            long best = LONG_MIN;
            for (int t = 0; t <= tmax; ++t)
                best = std::max(best, locals[i][t] + dp[i + 1][b - t]);
            dp[i][b] = best;
        }
    }
    CombineResult res;
    res.value = dp[0][budget];
    int b = budget;
    for (int i = 0; i < n; ++i) {
        const int tmax = std::min<int>(b, static_cast<int>(locals[i].size()) - 1);
        for (int t = 0; t <= tmax; ++t) {
            if (locals[i][t] + dp[i + 1][b - t] == dp[i][b]) {  // smallest optimal spend
                res.spent.push_back(t);
                b -= t;
                break;
            }
        }
    }
    return res;
}

Solution dp_approx(const Instance& inst, int budget) {
    if (budget < 0) throw InputError("budget must be non-negative");
    Instance norm = normalize_to_unit_squares(inst);
    auto cells = decompose_unit_grid(norm);

    std::vector<std::vector<long>> locals;
    std::vector<CellSolveResult> solves;
    for (const auto& cell : cells) {
        CellFrame frame{AxisRect{Rat(cell.cx), Rat(cell.cy), Rat(cell.cx + 1), Rat(cell.cy + 1)}};
        std::vector<CellPoint> pts;
        for (int p : cell.point_ids) pts.push_back(CellPoint{p, norm.points[p]});
        std::vector<CellRange> rngs;
        for (int r : cell.range_ids) rngs.push_back(CellRange{r, *as_rect(norm.ranges[r])});
        int kmax = std::min<int>(budget, static_cast<int>(rngs.size()));
        auto res = solve_cell(frame, pts, rngs, kmax);
        locals.push_back(res.best);
        solves.push_back(std::move(res));
    }

    auto combined = combine_budgets(locals, budget);
    std::set<int> deleted;
    for (std::size_t i = 0; i < solves.size(); ++i) {
        for (int id : solves[i].deleted[combined.spent[i]]) deleted.insert(id);
    }
    Solution s = make_solution(inst, std::vector<int>(deleted.begin(), deleted.end()));
    if (s.value < combined.value)
        throw InternalError("global exposure fell below the combined cell optima");
    return s;
}

// --- flattening -------------------------------------------------------------

namespace {

// Column of a slab x-coordinate in [0, h]: column 1 owns [0, 1], column j > 1
// owns (j-1, j]. Points on an interior grid line therefore belong to the
// column on their left, which pairs with keeping the degenerate clip of a
// range whose left edge sits on that line (it still owns its boundary points)
// and dropping the empty clip on the other side.
int column_of(const Rat& x, int h) {
    long c = ceil_rat(x);
    if (c < 1) c = 1;
    if (c > h) c = h;
    return static_cast<int>(c);
}

}  // namespace

FlattenedInstance flatten(const Instance& inst, int h, const Point& origin) {
    if (h < 1) throw InputError("h must be at least 1");
    FlattenedInstance flat;
    flat.h = h;
    flat.origin = origin;
    const Rat hh(h);
    // Columns are stacked h+1 apart, not h: with closed containment a shared
    // stack boundary would glue the top edge of one column to the bottom
    // points of the next, so a unit spacer row keeps the stacks disjoint.
    const long step = h + 1;

    for (int p = 0; p < static_cast<int>(inst.points.size()); ++p) {
        Rat rx = inst.points[p].x - origin.x;
        Rat ry = inst.points[p].y - origin.y;
        if (rx < 0 || rx > hh || ry < 0 || ry > hh)
            throw InputError("point outside the h x h square");
        int col = column_of(rx, h);
        flat.points.push_back(
            FlatPoint{p, col, Point{Rat(rx - (col - 1)), Rat(ry + (col - 1) * step)}});
    }

    for (int r = 0; r < static_cast<int>(inst.ranges.size()); ++r) {
        const AxisRect* rect = as_rect(inst.ranges[r]);
        if (!rect || !is_square(*rect) || rect->width() != 1)
            throw InputError("flatten needs unit-square ranges");
        // clip to the h x h square
        Rat x0 = std::max(Rat(rect->x0 - origin.x), Rat(0));
        Rat x1 = std::min(Rat(rect->x1 - origin.x), hh);
        Rat y0 = std::max(Rat(rect->y0 - origin.y), Rat(0));
        Rat y1 = std::min(Rat(rect->y1 - origin.y), hh);
        if (x0 > x1 || y0 > y1) continue;  // no part inside the square

        std::vector<FlatComponent> pieces;
        for (int j = 1; j <= h; ++j) {
            Rat lo = std::max(x0, Rat(j - 1));
            Rat hi = std::min(x1, Rat(j));
            if (lo > hi) continue;
            // A zero-width clip on a column's left boundary holds no points
            // (they belong to the column on the left); drop it.
            if (lo == hi && lo == Rat(j - 1) && j > 1) continue;
            const bool touches_left = lo == Rat(j - 1);
            const bool touches_right = hi == Rat(j);
            if (!touches_left && !touches_right)
                throw InternalError("range component interior to a column");
            FlatComponent c;
            c.original_range = r;
            c.type1 = !touches_left;
            c.column = j;
            c.xlo = lo - (j - 1);
            c.xhi = hi - (j - 1);
            c.ylo = y0 + (j - 1) * step;
            c.yhi = y1 + (j - 1) * step;
            pieces.push_back(std::move(c));
        }
        if (pieces.size() > 2) throw InternalError("a unit range split into over two pieces");
        if (pieces.size() == 2) {
            const FlatComponent& t1c = pieces[0].type1 ? pieces[0] : pieces[1];
            const FlatComponent& t0c = pieces[0].type1 ? pieces[1] : pieces[0];
            // seam consistency: the Type-1 piece begins where the Type-0 ends
            if (t1c.type1 == t0c.type1 || t1c.xlo != t0c.xhi || t1c.column + 1 != t0c.column)
                throw InternalError("mismatched seam after flattening");
        }
        for (auto& c : pieces) flat.components.push_back(std::move(c));
    }
    return flat;
}

// --- exact solve over the flattened slab ------------------------------------

namespace {

struct FlatEntry {
    long value;
    std::uint8_t choice;  // point: 0 skip, 1 expose; begin: 0 keep, 1 delete, 2 already paid
};

struct StateHash {
    std::size_t operator()(const std::vector<std::int16_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (std::int16_t x : v) {
            h ^= static_cast<std::size_t>(static_cast<std::uint16_t>(x));
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct FlatEv {
    Rat x;
    bool is_begin;
    int id;  // point index or component index
};

// State layout: [0]=event index, [1]=budget, then per anchor line j in 0..L:
// slot 2j   = closest exposed point above line j   (q_j^+)
// slot 2j+1 = closest exposed point below line j   (q_j^-)
// followed by the same layout holding the farthest kept Type-1 component
// above/below each line (Q_j^+/Q_j^-). kSentinel means unset.
struct FlatSolver {
    int L = 0;
    std::vector<Point> pts;
    std::vector<int> pt_orig;
    std::vector<long> pt_top_cell;  // last cell of the point's own stack
    std::vector<FlatComponent> comps;
    std::vector<int> comp_range;              // component -> local range
    std::vector<std::vector<int>> range_comps;
    std::vector<int> range_orig;              // local range -> original id
    std::vector<std::vector<char>> comp_pt;   // [comp][point]
    std::vector<FlatEv> events;
    int qbase = 2, Qbase = 0;
    std::size_t state_len = 0;
    std::unordered_map<std::vector<std::int16_t>, FlatEntry, StateHash> memo;

    bool comp_has_q_witness(int c, const std::vector<std::int16_t>& st) const {
        for (int s = 0; s < 2 * (L + 1); ++s) {
            int w = st[qbase + s];
            if (w != kSentinel && comp_pt[c][w]) return true;
        }
        return false;
    }

    // Range already paid for: some still-active Type-0 component of it
    // contains a recorded exposed point, or a Type-1 component beginning at
    // this very x does (the pre-paid seam case).
    bool already_paid(int r, const Rat& x, const std::vector<std::int16_t>& st) const {
        for (int c : range_comps[r]) {
            if (!comps[c].type1 && comps[c].xhi >= x && comp_has_q_witness(c, st)) return true;
            if (comps[c].type1 && comps[c].xlo == x && comp_has_q_witness(c, st)) return true;
        }
        return false;
    }

    bool forbidden(int p, const std::vector<std::int16_t>& st) const {
        for (int s = 0; s < 2 * (L + 1); ++s) {
            int c = st[Qbase + s];
            if (c != kSentinel && comp_pt[c][p]) return true;
        }
        return false;
    }

    // Ranges that must be paid for to expose p: those with an (automatically
    // active) Type-0 component containing p, plus those whose Type-1
    // component begins exactly at p's x and contains p — its begin event is
    // still ahead in the same column of events.
    std::vector<int> charge_set(int p, const Rat& x, const std::vector<std::int16_t>& st) const {
        std::vector<int> out;
        for (int r = 0; r < static_cast<int>(range_comps.size()); ++r) {
            bool hits = false;
            for (int c : range_comps[r]) {
                if (!comp_pt[c][p]) continue;
                if (!comps[c].type1 || comps[c].xlo == x) {
                    hits = true;
                    break;
                }
            }
            if (hits && !already_paid(r, x, st)) out.push_back(r);
        }
        return out;
    }

    // Distance ties go to the NEW point. A point on the begin line of a
    // Type-1 component pre-pays for its range, and the begin event can only
    // see that payment through a slot witness; an equal-distance incumbent
    // from further left would hide it. The eviction is safe for Type-0
    // reconstruction: an equal-distance evictor shares the witness's y and
    // lies behind the sweep front, so it sits in every active Type-0 box the
    // evicted witness sat in.
    void expose_update(std::vector<std::int16_t>& st, int p) const {
        long cell = floor_rat(pts[p].y) + 1;
        // a point on the top edge of its stack folds into the stack's last
        // cell; it must never register on a spacer-row line
        if (cell > pt_top_cell[p]) cell = pt_top_cell[p];
        {
            int slot = qbase + 2 * static_cast<int>(cell - 1);  // closest above line cell-1
            int q = st[slot];
            if (q == kSentinel || pts[p].y <= pts[q].y) st[slot] = static_cast<std::int16_t>(p);
        }
        {
            int slot = qbase + 2 * static_cast<int>(cell) + 1;  // closest below line cell
            int q = st[slot];
            if (q == kSentinel || pts[p].y >= pts[q].y) st[slot] = static_cast<std::int16_t>(p);
        }
    }

    void keep_update(std::vector<std::int16_t>& st, int c) const {
        long jlo = std::max(0L, ceil_rat(comps[c].ylo));
        long jhi = std::min(static_cast<long>(L), floor_rat(comps[c].yhi));
        for (long j = jlo; j <= jhi; ++j) {
            int up = Qbase + 2 * static_cast<int>(j);
            int dn = up + 1;
            int q = st[up];
            if (q == kSentinel || comps[c].yhi - Rat(j) > comps[q].yhi - Rat(j))
                st[up] = static_cast<std::int16_t>(c);
            q = st[dn];
            if (q == kSentinel || Rat(j) - comps[c].ylo > Rat(j) - comps[q].ylo)
                st[dn] = static_cast<std::int16_t>(c);
        }
    }

    long rec(std::vector<std::int16_t> st) {
        const int i = st[0];
        if (i == static_cast<int>(events.size())) return 0;
        if (auto it = memo.find(st); it != memo.end()) return it->second.value;

        const FlatEv& e = events[i];
        long best;
        std::uint8_t choice;
        if (!e.is_begin) {
            const int p = e.id;
            auto skip = st;
            ++skip[0];
            best = rec(std::move(skip));
            choice = 0;
            if (!forbidden(p, st)) {
                auto cs = charge_set(p, e.x, st);
                if (static_cast<int>(cs.size()) <= st[1]) {
                    auto nst = st;
                    ++nst[0];
                    nst[1] = static_cast<std::int16_t>(nst[1] - cs.size());
                    expose_update(nst, p);
                    long v = rec(std::move(nst)) + 1;
                    if (v > best) {
                        best = v;
                        choice = 1;
                    }
                }
            }
        } else {
            const int c = e.id;
            const int r = comp_range[c];
            if (already_paid(r, e.x, st)) {
                auto nst = st;
                ++nst[0];
                best = rec(std::move(nst));
                choice = 2;
            } else {
                auto keep = st;
                ++keep[0];
                keep_update(keep, c);
                best = rec(std::move(keep));
                choice = 0;
                if (st[1] >= 1) {
                    auto del = st;
                    ++del[0];
                    --del[1];
                    long v = rec(std::move(del));
                    if (v > best) {
                        best = v;
                        choice = 1;
                    }
                }
            }
        }
        memo.emplace(std::move(st), FlatEntry{best, choice});
        return best;
    }
};

}  // namespace

FlatSolveResult dp_flattened(const FlattenedInstance& flat, int kmax, int stack_limit) {
    if (flat.h > stack_limit)
        throw InfeasibleError("h exceeds the exact-solver stack limit");
    if (kmax < 0 || kmax > 32000) throw InputError("budget out of supported range");

    FlatSolver s;
    // Column stacks sit h+1 apart; the last stack tops out at h^2 + h - 1.
    s.L = flat.h * (flat.h + 1) - 1;
    s.qbase = 2;
    s.Qbase = 2 + 2 * (s.L + 1);
    s.state_len = static_cast<std::size_t>(2 + 4 * (s.L + 1));

    for (const auto& fp : flat.points) {
        s.pts.push_back(fp.pos);
        s.pt_orig.push_back(fp.original_point);
        s.pt_top_cell.push_back(static_cast<long>(fp.column - 1) * (flat.h + 1) + flat.h);
    }

    // Keep only ranges with a component containing at least one point.
    std::map<int, std::vector<const FlatComponent*>> by_range;
    for (const auto& c : flat.components) by_range[c.original_range].push_back(&c);
    for (const auto& [orig, comp_list] : by_range) {
        bool hits = false;
        for (const auto* c : comp_list)
            for (const auto& p : s.pts)
                if (c->xlo <= p.x && p.x <= c->xhi && c->ylo <= p.y && p.y <= c->yhi) {
                    hits = true;
                    break;
                }
        if (!hits) continue;
        int local = static_cast<int>(s.range_orig.size());
        s.range_orig.push_back(orig);
        s.range_comps.emplace_back();
        for (const auto* c : comp_list) {
            int ci = static_cast<int>(s.comps.size());
            s.comps.push_back(*c);
            s.comp_range.push_back(local);
            s.range_comps[local].push_back(ci);
            std::vector<char> row(s.pts.size(), 0);
            for (std::size_t p = 0; p < s.pts.size(); ++p)
                row[p] = c->xlo <= s.pts[p].x && s.pts[p].x <= c->xhi && c->ylo <= s.pts[p].y &&
                         s.pts[p].y <= c->yhi;
            s.comp_pt.push_back(std::move(row));
        }
    }

    if (s.pts.size() >= 15000 || s.comps.size() >= 15000)
        throw InputError("flattened instance too large");

    for (int p = 0; p < static_cast<int>(s.pts.size()); ++p)
        s.events.push_back(FlatEv{s.pts[p].x, false, p});
    for (int c = 0; c < static_cast<int>(s.comps.size()); ++c)
        if (s.comps[c].type1) s.events.push_back(FlatEv{s.comps[c].xlo, true, c});
    // Points precede range-begins at the same x: a point on the seam where a
    // range flips from Type-0 to Type-1 pre-pays for it, and the begin event
    // then sees the payment through the recorded exposed points.
    std::sort(s.events.begin(), s.events.end(), [](const FlatEv& a, const FlatEv& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.is_begin != b.is_begin) return b.is_begin;
        return a.id < b.id;
    });

    FlatSolveResult result;
    result.best.resize(kmax + 1);
    result.deleted.resize(kmax + 1);

    for (int b = 0; b <= kmax; ++b) {
        std::vector<std::int16_t> start(s.state_len, kSentinel);
        start[0] = 0;
        start[1] = static_cast<std::int16_t>(b);
        result.best[b] = s.rec(start);
        if (b > 0 && result.best[b] < result.best[b - 1])
            throw InternalError("flattened optimum decreased with a larger budget");

        // Replay choices to collect the deleted set.
        std::set<int> deleted_local;
        std::vector<std::int16_t> st = start;
        while (st[0] < static_cast<int>(s.events.size())) {
            const FlatEv& e = s.events[st[0]];
            const FlatEntry entry = s.memo.at(st);
            if (!e.is_begin) {
                if (entry.choice == 1) {
                    const auto charges = s.charge_set(e.id, e.x, st);
                    for (int r : charges)
                        if (!deleted_local.insert(r).second)
                            throw InternalError("range charged twice in the slab");
                    st[1] = static_cast<std::int16_t>(st[1] - static_cast<int>(charges.size()));
                    s.expose_update(st, e.id);
                }
            } else {
                if (entry.choice == 1) {
                    if (!deleted_local.insert(s.comp_range[e.id]).second)
                        throw InternalError("range deleted twice in the slab");
                    --st[1];
                } else if (entry.choice == 0) {
                    s.keep_update(st, e.id);
                }
            }
            ++st[0];
        }
        if (st[1] < 0) throw InternalError("slab replay overspent the budget");

        // Validate in slab space: exposure under the certificate must match.
        long exposed = 0;
        for (int p = 0; p < static_cast<int>(s.pts.size()); ++p) {
            bool covered = false;
            for (int c = 0; c < static_cast<int>(s.comps.size()) && !covered; ++c)
                if (!deleted_local.count(s.comp_range[c]) && s.comp_pt[c][p]) covered = true;
            if (!covered) ++exposed;
        }
        if (exposed != result.best[b])
            throw InternalError("slab certificate does not reproduce the DP value");

        std::vector<int> ids;
        for (int r : deleted_local) ids.push_back(s.range_orig[r]);
        std::sort(ids.begin(), ids.end());
        result.deleted[b] = std::move(ids);
    }
    return result;
}

// --- the two shifted-grid schemes --------------------------------------------

namespace {

struct ShiftResult {
    Solution solution;
    bool valid = false;
};

// Distance from x to the nearest line a + i*h (i over all integers).
Rat line_distance(const Rat& x, long a, long h) {
    Rat rel = x - a;
    Rat m = rel - Rat(h) * floor_rat(rel / h);
    return std::min(m, Rat(Rat(h) - m));
}

Solution best_shift_scheme(const Instance& inst, int h, int budget, bool discard_near_lines,
                           int stack_limit) {
    Instance norm = normalize_to_unit_squares(inst);
    const Rat hh(h);

    Solution best;
    bool have = false;
    for (long a = 0; a < h; ++a) {
        for (long b = 0; b < h; ++b) {
            // points per supercell, after the per-shift discard if requested
            std::map<std::pair<long, long>, std::vector<int>> super;
            for (int p = 0; p < static_cast<int>(norm.points.size()); ++p) {
                const Point& pt = norm.points[p];
                if (discard_near_lines &&
                    (line_distance(pt.x, a, h) <= 1 || line_distance(pt.y, b, h) <= 1))
                    continue;
                long ix = floor_rat((pt.x - a) / hh);
                long iy = floor_rat((pt.y - b) / hh);
                super[{ix, iy}].push_back(p);
            }

            std::vector<std::vector<long>> locals;
            std::vector<std::vector<std::vector<int>>> certs;  // [cell][budget] -> global ids
            for (const auto& [key, pts] : super) {
                Point origin{Rat(a) + key.first * hh, Rat(b) + key.second * hh};
                Instance sub;
                sub.k = 0;
                std::vector<int> range_map;
                for (int p : pts) sub.points.push_back(norm.points[p]);
                for (int r = 0; r < static_cast<int>(norm.ranges.size()); ++r) {
                    bool hits = false;
                    for (int p : pts)
                        if (contains(norm.ranges[r], norm.points[p])) {
                            hits = true;
                            break;
                        }
                    if (hits) {
                        range_map.push_back(r);
                        sub.ranges.push_back(norm.ranges[r]);
                    }
                }
                int kmax = std::min<int>(budget, static_cast<int>(sub.ranges.size()));
                auto flat = flatten(sub, h, origin);
                auto solved = dp_flattened(flat, kmax, stack_limit);
                locals.push_back(solved.best);
                std::vector<std::vector<int>> mapped(kmax + 1);
                for (int t = 0; t <= kmax; ++t)
                    for (int rid : solved.deleted[t]) mapped[t].push_back(range_map[rid]);
                certs.push_back(std::move(mapped));
            }

            auto combined = combine_budgets(locals, budget);
            std::set<int> deleted;
            for (std::size_t i = 0; i < certs.size(); ++i)
                for (int id : certs[i][combined.spent[i]]) deleted.insert(id);
            Solution candidate =
                make_solution(inst, std::vector<int>(deleted.begin(), deleted.end()));
            if (candidate.value < combined.value)
                throw InternalError("global exposure fell below the combined value");
            if (!have || candidate.value > best.value) {
                best = std::move(candidate);
                have = true;
            }
        }
    }
    if (!have) return make_solution(inst, {});
    return best;
}

}  // namespace

Solution ptas_budget(const Instance& inst, int k, const Rat& epsilon, int stack_limit) {
    if (!(epsilon > 0)) throw InputError("epsilon must be positive");
    if (k < 0 || k > static_cast<int>(inst.ranges.size()))
        throw InputError("deletion budget out of range");
    int h = static_cast<int>(ceil_rat(Rat(8) / epsilon));
    if (h > stack_limit)
        throw InfeasibleError("epsilon too small for exact mode: h exceeds the stack limit");
    int budget = static_cast<int>(floor_rat(Rat(1 + epsilon) * k));
    return best_shift_scheme(inst, h, budget, /*discard_near_lines=*/false, stack_limit);
}

Solution ptas_points(const Instance& inst, int k, const Rat& epsilon, int stack_limit) {
    if (!(epsilon > 0)) throw InputError("epsilon must be positive");
    if (k < 0 || k > static_cast<int>(inst.ranges.size()))
        throw InputError("deletion budget out of range");
    int h = static_cast<int>(ceil_rat(Rat(4) / epsilon));
    if (h > stack_limit)
        throw InfeasibleError("epsilon too small for exact mode: h exceeds the stack limit");
    return best_shift_scheme(inst, h, k, /*discard_near_lines=*/true, stack_limit);
}

}  // namespace maxexp
