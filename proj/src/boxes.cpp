#include "binmeas/boxes.hpp"

#include <algorithm>

#include "binmeas/errors.hpp"

namespace binmeas {

namespace {

void check_box(const Box& b, std::size_t dim) {
    if (b.dim() != dim) throw StructureError("box dimension mismatch");
    for (const auto& [lo, hi] : b.sides)
        if (!(lo < hi)) throw StructureError("box sides must satisfy lo < hi");
}

bool box_contains_cell(const Box& b, const Box& cell) {
    for (std::size_t k = 0; k < b.dim(); ++k)
        if (!(b.sides[k].first <= cell.sides[k].first && cell.sides[k].second <= b.sides[k].second))
            return false;
    return true;
}

bool any_contains_cell(const std::vector<Box>& boxes, const Box& cell) {
    for (const Box& b : boxes)
        if (box_contains_cell(b, cell)) return true;
    return false;
}

// Grid cells spanned by the breakpoints of all the given boxes. Every input
// box is a disjoint union of cells, so per-cell membership is exact.
std::vector<Box> grid_cells(std::size_t dim, const std::vector<Box>& boxes) {
    std::vector<std::vector<Rational>> cuts(dim);
    for (const Box& b : boxes) {
        for (std::size_t k = 0; k < dim; ++k) {
            cuts[k].push_back(b.sides[k].first);
            cuts[k].push_back(b.sides[k].second);
        }
    }
    for (auto& c : cuts) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
    }
    std::vector<Box> cells;
    Box cur;
    cur.sides.resize(dim);
    auto rec = [&](auto&& self, std::size_t axis) -> void {
        if (axis == dim) {
            cells.push_back(cur);
            return;
        }
        for (std::size_t i = 0; i + 1 < cuts[axis].size(); ++i) {
            cur.sides[axis] = {cuts[axis][i], cuts[axis][i + 1]};
            self(self, axis + 1);
        }
    };
    if (!boxes.empty()) rec(rec, 0);
    return cells;
}

// Coalesces adjacent cells axis by axis; keeps the list small.
std::vector<Box> coalesce(std::vector<Box> boxes, std::size_t dim) {
    for (std::size_t axis = 0; axis < dim; ++axis) {
        auto key_less = [axis](const Box& a, const Box& b) {
            for (std::size_t k = 0; k < a.dim(); ++k) {
                if (k == axis) continue;
                if (a.sides[k] != b.sides[k]) return a.sides[k] < b.sides[k];
            }
            return a.sides[axis] < b.sides[axis];
        };
        std::sort(boxes.begin(), boxes.end(), key_less);
        std::vector<Box> merged;
        for (Box& b : boxes) {
            bool joined = false;
            if (!merged.empty()) {
                Box& last = merged.back();
                bool same_others = true;
                for (std::size_t k = 0; k < dim; ++k)
                    if (k != axis && last.sides[k] != b.sides[k]) same_others = false;
                if (same_others && last.sides[axis].second == b.sides[axis].first) {
                    last.sides[axis].second = b.sides[axis].second;
                    joined = true;
                }
            }
            if (!joined) merged.push_back(std::move(b));
        }
        boxes = std::move(merged);
    }
    std::sort(boxes.begin(), boxes.end());
    return boxes;
}

}  // namespace

BoxUnion::BoxUnion(std::size_t dim, const std::vector<Box>& raw) : dim_(dim) {
    if (dim == 0 || dim > kDimensionCap)
        throw UsageError("dimension must be between 1 and " + std::to_string(kDimensionCap));
    for (const Box& b : raw) check_box(b, dim);
    std::vector<Box> cells = grid_cells(dim, raw);
    std::vector<Box> kept;
    for (Box& cell : cells)
        if (any_contains_cell(raw, cell)) kept.push_back(std::move(cell));
    boxes_ = coalesce(std::move(kept), dim);
}

BoxUnion bx_op(BxOp op, const BoxUnion& a, const BoxUnion& b) {
    if (a.is_empty() && b.is_empty()) return a;
    if (a.is_empty() || b.is_empty()) {
        const BoxUnion& full = a.is_empty() ? b : a;
        switch (op) {
            case BxOp::Cap: return BoxUnion(full.dim());
            case BxOp::Minus: return a.is_empty() ? BoxUnion(full.dim()) : a;
            default: return full;  // Delta and Cup reduce to the nonempty side
        }
    }
    if (a.dim() != b.dim()) throw StructureError("box union dimension mismatch");
    std::vector<Box> all = a.boxes();
    all.insert(all.end(), b.boxes().begin(), b.boxes().end());
    std::vector<Box> kept;
    for (Box& cell : grid_cells(a.dim(), all)) {
        const bool ina = any_contains_cell(a.boxes(), cell);
        const bool inb = any_contains_cell(b.boxes(), cell);
        bool keep = false;
        switch (op) {
            case BxOp::Delta: keep = ina != inb; break;
            case BxOp::Cap: keep = ina && inb; break;
            case BxOp::Cup: keep = ina || inb; break;
            case BxOp::Minus: keep = ina && !inb; break;
        }
        if (keep) kept.push_back(std::move(cell));
    }
    return BoxUnion(a.dim(), kept);
}

Bit bx_member(const BoxUnion& a, const Point& x) {
    if (a.is_empty()) return 0;
    if (x.coords.size() != a.dim()) throw StructureError("point dimension mismatch");
    for (const Box& b : a.boxes()) {
        bool in = true;
        for (std::size_t k = 0; k < a.dim() && in; ++k)
            in = b.sides[k].first <= x.coords[k] && x.coords[k] < b.sides[k].second;
        if (in) return 1;
    }
    return 0;
}

bool bx_same_set(const BoxUnion& a, const BoxUnion& b) {
    if (a.is_empty() || b.is_empty()) return a.is_empty() && b.is_empty();
    return bx_op(BxOp::Delta, a, b).is_empty();
}

Rational bx_diameter_sq(const BoxUnion& a) {
    if (a.is_empty()) throw DomainError("the empty set has no diameter");
    Rational best = 0;
    for (const Box& p : a.boxes()) {
        for (const Box& q : a.boxes()) {
            Rational sum = 0;
            for (std::size_t k = 0; k < a.dim(); ++k) {
                const Rational d1 = p.sides[k].second - q.sides[k].first;
                const Rational d2 = q.sides[k].second - p.sides[k].first;
                const Rational d = d1 > d2 ? d1 : d2;
                sum += d * d;
            }
            if (sum > best) best = sum;
        }
    }
    return best;
}

}  // namespace binmeas
