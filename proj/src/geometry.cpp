#include "maxexp/geometry.hpp"

#include <algorithm>
#include <map>

#include "maxexp/errors.hpp"

namespace maxexp {

Rat cross2(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

void validate_range(const Range& r) {
    if (const auto* rect = std::get_if<AxisRect>(&r.shape)) {
        if (!(rect->x0 < rect->x1) || !(rect->y0 < rect->y1))
            throw InputError("degenerate rectangle");
        return;
    }
    if (const auto* disk = std::get_if<Disk>(&r.shape)) {
        if (!(disk->r > 0)) throw InputError("disk radius must be positive");
        return;
    }
    const auto& poly = std::get<ConvexPolygon>(r.shape);
    const auto& v = poly.vertices;
    if (v.size() < 3) throw InputError("polygon needs at least 3 vertices");
    // Strict convexity in CCW order also rules out repeats and collinear runs.
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        const Point& c = v[(i + 2) % v.size()];
        if (!(cross2(a, b, c) > 0))
            throw InputError("polygon must be strictly convex and counter-clockwise");
    }
}

void validate_instance(const Instance& inst) {
    for (const auto& r : inst.ranges) validate_range(r);
    if (inst.k < 0) throw InputError("k must be non-negative");
    if (inst.k > static_cast<int>(inst.ranges.size()))
        throw InputError("k exceeds the number of ranges");
}

bool contains(const Range& r, const Point& p) {
    if (const auto* rect = std::get_if<AxisRect>(&r.shape)) {
        return rect->x0 <= p.x && p.x <= rect->x1 && rect->y0 <= p.y && p.y <= rect->y1;
    }
    if (const auto* disk = std::get_if<Disk>(&r.shape)) {
        Rat dx = p.x - disk->cx;
        Rat dy = p.y - disk->cy;
        return dx * dx + dy * dy <= disk->r * disk->r;
    }
    const auto& v = std::get<ConvexPolygon>(r.shape).vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (cross2(v[i], v[(i + 1) % v.size()], p) < 0) return false;
    }
    return true;
}

Signature signature_of(const Instance& inst, int point_id) {
    if (point_id < 0 || point_id >= static_cast<int>(inst.points.size()))
        throw InputError("point id out of range");
    Signature sig;
    for (int r = 0; r < static_cast<int>(inst.ranges.size()); ++r)
        if (contains(inst.ranges[r], inst.points[point_id])) sig.push_back(r);
    return sig;
}

std::vector<Signature> all_signatures(const Instance& inst) {
    std::vector<Signature> sigs(inst.points.size());
    for (int p = 0; p < static_cast<int>(inst.points.size()); ++p)
        sigs[p] = signature_of(inst, p);
    return sigs;
}

std::vector<int> points_in(const Instance& inst, int range_id) {
    if (range_id < 0 || range_id >= static_cast<int>(inst.ranges.size()))
        throw InputError("range id out of range");
    std::vector<int> ids;
    for (int p = 0; p < static_cast<int>(inst.points.size()); ++p)
        if (contains(inst.ranges[range_id], inst.points[p])) ids.push_back(p);
    return ids;
}

std::vector<int> exposed_points(const Instance& inst, const std::vector<int>& deleted) {
    std::vector<char> gone(inst.ranges.size(), 0);
    for (int id : deleted) {
        if (id < 0 || id >= static_cast<int>(inst.ranges.size()))
            throw InputError("deleted range id out of range");
        gone[id] = 1;
    }
    std::vector<int> out;
    for (int p = 0; p < static_cast<int>(inst.points.size()); ++p) {
        bool covered = false;
        for (int r = 0; r < static_cast<int>(inst.ranges.size()) && !covered; ++r)
            if (!gone[r] && contains(inst.ranges[r], inst.points[p])) covered = true;
        if (!covered) out.push_back(p);
    }
    return out;
}

std::vector<Group> group_by_signature(const Instance& inst) {
    std::map<Signature, std::vector<int>> classes;
    for (int p = 0; p < static_cast<int>(inst.points.size()); ++p) {
        Signature sig = signature_of(inst, p);
        if (!sig.empty()) classes[std::move(sig)].push_back(p);
    }
    std::vector<Group> groups;
    groups.reserve(classes.size());
    for (auto& [sig, ids] : classes) groups.push_back(Group{sig, ids});
    std::stable_sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
        if (a.point_ids.size() != b.point_ids.size())
            return a.point_ids.size() > b.point_ids.size();
        return a.signature < b.signature;
    });
    return groups;
}

FilteredInstance remove_unexposable_points(const Instance& inst) {
    FilteredInstance out;
    out.instance.ranges = inst.ranges;
    out.instance.k = inst.k;
    out.old_to_new.assign(inst.points.size(), -1);
    for (int p = 0; p < static_cast<int>(inst.points.size()); ++p) {
        if (static_cast<int>(signature_of(inst, p).size()) > inst.k) continue;
        out.old_to_new[p] = static_cast<int>(out.instance.points.size());
        out.instance.points.push_back(inst.points[p]);
        out.kept_point_ids.push_back(p);
    }
    return out;
}

Solution make_solution(const Instance& inst, std::vector<int> deleted) {
    std::sort(deleted.begin(), deleted.end());
    deleted.erase(std::unique(deleted.begin(), deleted.end()), deleted.end());
    Solution s;
    s.exposed = exposed_points(inst, deleted);
    s.deleted = std::move(deleted);
    s.value = static_cast<long>(s.exposed.size());
    return s;
}

const AxisRect* as_rect(const Range& r) { return std::get_if<AxisRect>(&r.shape); }

bool is_square(const AxisRect& r) { return r.width() == r.height(); }

std::optional<std::pair<Rat, Rat>> common_rect_size(const Instance& inst) {
    if (inst.ranges.empty()) return std::make_pair(Rat(1), Rat(1));
    const AxisRect* first = as_rect(inst.ranges[0]);
    if (!first) return std::nullopt;
    Rat w = first->width(), h = first->height();
    for (const auto& r : inst.ranges) {
        const AxisRect* rect = as_rect(r);
        if (!rect || rect->width() != w || rect->height() != h) return std::nullopt;
    }
    return std::make_pair(w, h);
}

}  // namespace maxexp
