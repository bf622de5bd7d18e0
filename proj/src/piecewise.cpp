#include "vdc/piecewise.hpp"

#include <algorithm>

namespace vdc {

PiecewiseAffine PiecewiseAffine::constant(const Rat& v) {
    return PiecewiseAffine({Piece{Rat(0), Rat(0), v}});
}

PiecewiseAffine PiecewiseAffine::from_pieces(std::vector<Piece> pieces) {
    if (pieces.empty()) throw validation_error("piecewise: no pieces");
    if (pieces.front().x0 != 0) throw validation_error("piecewise: first breakpoint must be 0");
    std::vector<Piece> merged;
    merged.reserve(pieces.size());
    for (auto& p : pieces) {
        if (p.x0 < 0 || p.x0 >= 1) throw validation_error("piecewise: breakpoint outside [0,1)");
        if (!merged.empty()) {
            if (p.x0 <= merged.back().x0)
                throw validation_error("piecewise: breakpoints not strictly increasing");
            if (p.slope == merged.back().slope && p.icept == merged.back().icept) continue;
        }
        merged.push_back(std::move(p));
    }
    return PiecewiseAffine(std::move(merged));
}

size_t PiecewiseAffine::index_of(const Rat& x) const {
    // last piece with x0 <= x
    size_t lo = 0, hi = pieces_.size();
    while (hi - lo > 1) {
        size_t mid = (lo + hi) / 2;
        if (pieces_[mid].x0 <= x)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

Rat PiecewiseAffine::eval(const Rat& x) const {
    Rat u = frac1(x);
    const Piece& p = pieces_[index_of(u)];
    Rat v = p.slope * u + p.icept;
    v.canonicalize();
    return v;
}

Rat PiecewiseAffine::left_limit(const Rat& x) const {
    if (!(x > 0 && x <= 1)) throw validation_error("left_limit: need x in (0,1]");
    size_t i = index_of(x == 1 ? pieces_.back().x0 : Rat(x));
    if (x != 1 && pieces_[i].x0 == x) i = i == 0 ? pieces_.size() - 1 : i - 1;
    Rat v = pieces_[i].slope * x + pieces_[i].icept;
    v.canonicalize();
    return v;
}

bool PiecewiseAffine::continuous_on_interior() const {
    for (size_t i = 1; i < pieces_.size(); ++i)
        if (left_limit(pieces_[i].x0) != eval(pieces_[i].x0)) return false;
    return true;
}

bool PiecewiseAffine::wraps_continuously() const { return left_limit(Rat(1)) == eval(Rat(0)); }

std::pair<Rat, Rat> PiecewiseAffine::max_on_unit() const {
    if (!continuous_on_interior() || !wraps_continuously())
        throw validation_error("max_on_unit requires a continuous function");
    // continuous case: the sup over each [x0_i, x0_{i+1}) is attained at one
    // of the two breakpoints, so scanning piece starts is exact
    Rat best = eval(Rat(0)), arg = Rat(0);
    for (const Piece& p : pieces_) {
        Rat v = p.slope * p.x0 + p.icept;
        v.canonicalize();
        if (v > best) {
            best = v;
            arg = p.x0;
        }
    }
    return {best, arg};
}

PiecewiseAffine PiecewiseAffine::operator+(const PiecewiseAffine& other) const {
    std::vector<Piece> out;
    size_t i = 0, j = 0;
    Rat x(0);
    while (true) {
        Piece p{x, pieces_[i].slope + other.pieces_[j].slope,
                pieces_[i].icept + other.pieces_[j].icept};
        p.slope.canonicalize();
        p.icept.canonicalize();
        out.push_back(std::move(p));
        // advance to the next breakpoint of either operand
        Rat nx1 = i + 1 < pieces_.size() ? pieces_[i + 1].x0 : Rat(1);
        Rat nx2 = j + 1 < other.pieces_.size() ? other.pieces_[j + 1].x0 : Rat(1);
        x = std::min(nx1, nx2);
        if (x >= 1) break;
        if (nx1 == x) ++i;
        if (nx2 == x) ++j;
    }
    return from_pieces(std::move(out));
}

std::string PiecewiseAffine::csv() const {
    std::string out;
    for (const Piece& p : pieces_) {
        out += p.x0.get_num().get_str() + "," + p.x0.get_den().get_str() + ",";
        out += p.slope.get_num().get_str() + "," + p.slope.get_den().get_str() + ",";
        out += p.icept.get_num().get_str() + "," + p.icept.get_den().get_str() + "\n";
    }
    return out;
}

void append_upper_envelope(std::vector<PiecewiseAffine::Piece>& out,
                           std::vector<IntLine> lines, const Rat& xl, const Rat& xr) {
    std::sort(lines.begin(), lines.end());
    // per slope keep only the max intercept
    std::vector<IntLine> uniq;
    for (const IntLine& l : lines) {
        if (!uniq.empty() && uniq.back().slope == l.slope)
            uniq.back().icept = l.icept;  // sorted: later icept is larger
        else
            uniq.push_back(l);
    }
    struct Seg {
        IntLine line;
        Rat xs;  // segment start
    };
    std::vector<Seg> hull;
    for (const IntLine& l : uniq) {
        while (!hull.empty()) {
            const Seg& top = hull.back();
            // x where l overtakes top.line (slopes strictly increase here)
            Rat x = Rat(static_cast<long>(top.line.icept - l.icept)) /
                    Rat(static_cast<long>(l.slope - top.line.slope));
            x.canonicalize();
            if (x <= top.xs)
                hull.pop_back();
            else {
                hull.push_back(Seg{l, x});
                break;
            }
        }
        if (hull.empty()) hull.push_back(Seg{l, xl});
    }
    for (size_t i = 0; i < hull.size(); ++i) {
        Rat xs = std::max(hull[i].xs, xl);
        Rat xe = i + 1 < hull.size() ? std::min(hull[i + 1].xs, xr) : xr;
        if (xs >= xr || xe <= xl || xs >= xe) continue;
        out.push_back({xs, Rat(static_cast<long>(hull[i].line.slope)),
                       Rat(static_cast<long>(hull[i].line.icept))});
    }
}

}  // namespace vdc
