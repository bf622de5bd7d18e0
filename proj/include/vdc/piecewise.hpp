#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vdc/rat.hpp"

namespace vdc {

/// 1-periodic piecewise-affine function on [0,1). Piece i lives on
/// [x0_i, x0_{i+1}) (the last piece runs to 1); breakpoints are strictly
/// increasing rationals starting at 0. Values at breakpoints come from the
/// right piece. Immutable after construction; adjacent pieces with equal
/// coefficients are merged on construction.
class PiecewiseAffine {
   public:
    struct Piece {
        Rat x0, slope, icept;
        bool operator==(const Piece&) const = default;
    };

    PiecewiseAffine() : PiecewiseAffine(constant(Rat(0))) {}
    static PiecewiseAffine constant(const Rat& v);
    static PiecewiseAffine from_pieces(std::vector<Piece> pieces);

    const std::vector<Piece>& pieces() const { return pieces_; }
    size_t piece_count() const { return pieces_.size(); }

    /// Exact value of the periodic extension at any rational.
    Rat eval(const Rat& x) const;

    /// Left limit at x (in (0,1]); differs from eval only at jumps.
    Rat left_limit(const Rat& x) const;

    bool continuous_on_interior() const;
    /// Value at 1^- equals value at 0.
    bool wraps_continuously() const;

    /// Exact max over [0,1) and the smallest argmax. Requires a continuous
    /// function (piece ends then attain the sup); throws otherwise.
    std::pair<Rat, Rat> max_on_unit() const;

    PiecewiseAffine operator+(const PiecewiseAffine& other) const;

    bool operator==(const PiecewiseAffine&) const = default;

    /// CSV rows "x_num,x_den,slope_num,slope_den,intercept_num,intercept_den"
    /// in breakpoint order (header not included).
    std::string csv() const;

   private:
    explicit PiecewiseAffine(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {}
    size_t index_of(const Rat& x_in_unit) const;

    std::vector<Piece> pieces_;
};

/// A line y = slope*x + icept with integer coefficients (phi pieces and
/// their envelopes have integer coefficients throughout).
struct IntLine {
    long long slope, icept;
    bool operator<(const IntLine& o) const {
        return slope != o.slope ? slope < o.slope : icept < o.icept;
    }
};

/// Appends the upper envelope of `lines` restricted to [xl, xr) onto `out`
/// as pieces (exact rational intersection points, closed-left/open-right).
void append_upper_envelope(std::vector<PiecewiseAffine::Piece>& out,
                           std::vector<IntLine> lines, const Rat& xl, const Rat& xr);

}  // namespace vdc
