#pragma once

#include <optional>
#include <vector>

#include "ebeta/rational.hpp"
#include "ebeta/words.hpp"

namespace ebeta {

/// The base of the iterated function system x ↦ (x+d)/β, d ∈ {0, 1, β+1}.
/// Restricted to rationals ≥ 3 so that all geometry stays exact.
class Beta {
public:
    static Beta make(long num, long den = 1) { return make(Rat(num, den)); }
    static Beta make(const Rat& v) {
        if (v < Rat(3)) throw ValueBelowThree("base must be >= 3, got " + v.str());
        return Beta(v);
    }
    const Rat& value() const { return value_; }
    bool is_integer() const { return value_.is_integer(); }

private:
    explicit Beta(Rat v) : value_(std::move(v)) {}
    Rat value_;
};

/// Right endpoint (β+1)/(β−1) of the attractor's convex hull [0, γ].
Rat gamma(const Beta& beta);

/// Numeric value of a digit: 0, 1 or β+1.
Rat digit_value(const Beta& beta, Digit d);

/// x ↦ scale·x + offset, exact.
struct AffineMap {
    Rat scale{1};
    Rat offset{0};

    Rat operator()(const Rat& x) const { return scale * x + offset; }
    /// this ∘ inner
    AffineMap after(const AffineMap& inner) const {
        return {scale * inner.scale, scale * inner.offset + offset};
    }
    friend bool operator==(const AffineMap& a, const AffineMap& b) {
        return a.scale == b.scale && a.offset == b.offset;
    }
};

AffineMap digit_map(const Beta& beta, Digit d);

/// f_w = f_{d_1} ∘ ... ∘ f_{d_n}; scale β^(−n), offset Σ value(d_i)·β^(−i).
AffineMap compose_word(const Beta& beta, const Word& w);

/// An interval with per-endpoint openness. Level sets use closed intervals,
/// holes are open.
struct Interval {
    Rat lo, hi;
    bool lo_open = false;
    bool hi_open = false;

    static Interval closed(Rat lo, Rat hi) { return {std::move(lo), std::move(hi), false, false}; }
    static Interval open(Rat lo, Rat hi) { return {std::move(lo), std::move(hi), true, true}; }

    Rat length() const { return hi - lo; }
    bool contains(const Rat& x) const {
        if (x < lo || x > hi) return false;
        if (x == lo && lo_open) return false;
        if (x == hi && hi_open) return false;
        return true;
    }
    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi && a.lo_open == b.lo_open && a.hi_open == b.hi_open;
    }
};

/// Finite union of disjoint closed intervals, sorted, touching parts merged.
class IntervalSet {
public:
    IntervalSet() = default;

    /// Normalizes: sorts and merges overlapping or touching closed intervals.
    static IntervalSet from_closed(std::vector<Interval> parts);

    const std::vector<Interval>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    bool contains(const Rat& x) const;
    bool contains(const IntervalSet& other) const;
    IntervalSet intersect(const IntervalSet& other) const;
    IntervalSet map(const AffineMap& g) const;
    Rat total_length() const;

    friend bool operator==(const IntervalSet& a, const IntervalSet& b) {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<Interval> parts_;
};

/// Sorted distinct values of f_w(0) over w ∈ Ω^n; words inducing the same map
/// (the complete overlap 0B = 11 and its consequences) are collapsed.
std::vector<Rat> level_offsets(const Beta& beta, int n);

/// Union of all level-n basic intervals f_w([0, γ]), merged. Level 0 is the hull itself.
IntervalSet level_intervals(const Beta& beta, int n);

/// Open complementary gaps of the level-n set inside [0, γ], left to right. n ≥ 1.
std::vector<Interval> holes(const Beta& beta, int n);

/// The biggest hole (f_1(γ), f_{β+1}(0)); present at every level.
Interval fundamental_hole(const Beta& beta);

struct Membership {
    enum class Kind { In, Out, Unknown };
    Kind kind = Kind::Unknown;
    int depth = 0;  // for Unknown: depth at which the search stopped

    bool in() const { return kind == Kind::In; }
    bool out() const { return kind == Kind::Out; }
    static Membership make_in() { return {Kind::In, 0}; }
    static Membership make_out() { return {Kind::Out, 0}; }
    static Membership unknown(int depth) { return {Kind::Unknown, depth}; }
};

/// Decides x ∈ E by exploring the expanding branches x ↦ βx − d pruned to [0, γ].
/// Integer β: the reachable states form a finite set, so the answer is exact
/// (In iff a cycle or a fixed endpoint is reachable). Non-integer rational β:
/// exact In (cycle / endpoint reached) and exact Out (all branches leave [0, γ])
/// within max_depth, otherwise Unknown. Points outside [0, γ] report Out.
Membership decide_membership(const Beta& beta, const Rat& x, int max_depth = 40);

}  // namespace ebeta
