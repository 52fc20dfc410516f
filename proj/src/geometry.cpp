#include "ebeta/geometry.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace ebeta {

Rat gamma(const Beta& beta) {
    const Rat& b = beta.value();
    return (b + Rat(1)) / (b - Rat(1));
}

Rat digit_value(const Beta& beta, Digit d) {
    switch (d) {
        case Digit::D0: return Rat(0);
        case Digit::D1: return Rat(1);
        default: return beta.value() + Rat(1);
    }
}

AffineMap digit_map(const Beta& beta, Digit d) {
    const Rat inv = Rat(1) / beta.value();
    return {inv, digit_value(beta, d) * inv};
}

AffineMap compose_word(const Beta& beta, const Word& w) {
    const Rat inv = Rat(1) / beta.value();
    Rat scale(1);
    Rat offset(0);
    for (Digit d : w) {
        scale *= inv;
        offset += digit_value(beta, d) * scale;
    }
    return {scale, offset};
}

IntervalSet IntervalSet::from_closed(std::vector<Interval> parts) {
    for (const Interval& p : parts) {
        if (p.lo_open || p.hi_open) throw Error("IntervalSet parts must be closed");
        if (p.hi < p.lo) throw Error("empty interval");
    }
    std::sort(parts.begin(), parts.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    IntervalSet s;
    for (Interval& p : parts) {
        if (!s.parts_.empty() && p.lo <= s.parts_.back().hi) {
            if (p.hi > s.parts_.back().hi) s.parts_.back().hi = p.hi;
        } else {
            s.parts_.push_back(std::move(p));
        }
    }
    return s;
}

bool IntervalSet::contains(const Rat& x) const {
    for (const Interval& p : parts_) {
        if (x < p.lo) return false;
        if (x <= p.hi) return true;
    }
    return false;
}

bool IntervalSet::contains(const IntervalSet& other) const {
    // Parts are maximal, so every part of a subset lies inside a single part.
    size_t i = 0;
    for (const Interval& q : other.parts_) {
        while (i < parts_.size() && parts_[i].hi < q.lo) ++i;
        if (i == parts_.size() || q.lo < parts_[i].lo || q.hi > parts_[i].hi) return false;
    }
    return true;
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
    std::vector<Interval> out;
    size_t i = 0, j = 0;
    while (i < parts_.size() && j < other.parts_.size()) {
        const Interval& a = parts_[i];
        const Interval& b = other.parts_[j];
        const Rat lo = std::max(a.lo, b.lo);
        const Rat hi = std::min(a.hi, b.hi);
        if (lo <= hi) out.push_back(Interval::closed(lo, hi));
        if (a.hi < b.hi)
            ++i;
        else
            ++j;
    }
    return from_closed(std::move(out));
}

IntervalSet IntervalSet::map(const AffineMap& g) const {
    std::vector<Interval> out;
    out.reserve(parts_.size());
    for (const Interval& p : parts_) {
        Rat a = g(p.lo), b = g(p.hi);
        if (g.scale.sign() < 0) std::swap(a, b);
        out.push_back(Interval::closed(a, b));
    }
    if (g.scale.sign() < 0) std::reverse(out.begin(), out.end());
    IntervalSet s;
    s.parts_ = std::move(out);
    return s;
}

Rat IntervalSet::total_length() const {
    Rat sum(0);
    for (const Interval& p : parts_) sum += p.length();
    return sum;
}

std::vector<Rat> level_offsets(const Beta& beta, int n) {
    if (n < 0) throw Error("negative level");
    std::vector<Rat> offsets{Rat(0)};
    const Rat inv = Rat(1) / beta.value();
    Rat pw(1);
    for (int i = 1; i <= n; ++i) {
        pw *= inv;
        const Rat one = pw;
        const Rat big = (beta.value() + Rat(1)) * pw;
        std::vector<Rat> next;
        next.reserve(offsets.size() * 3);
        for (const Rat& o : offsets) {
            next.push_back(o);
            next.push_back(o + one);
            next.push_back(o + big);
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        offsets = std::move(next);
    }
    return offsets;
}

IntervalSet level_intervals(const Beta& beta, int n) {
    const Rat len = gamma(beta) * beta.value().pow(-static_cast<long>(n));
    std::vector<Interval> parts;
    for (const Rat& o : level_offsets(beta, n)) parts.push_back(Interval::closed(o, o + len));
    return IntervalSet::from_closed(std::move(parts));
}

std::vector<Interval> holes(const Beta& beta, int n) {
    if (n < 1) throw Error("holes need level >= 1");
    const IntervalSet s = level_intervals(beta, n);
    std::vector<Interval> gaps;
    for (size_t i = 0; i + 1 < s.parts().size(); ++i)
        gaps.push_back(Interval::open(s.parts()[i].hi, s.parts()[i + 1].lo));
    return gaps;
}

Interval fundamental_hole(const Beta& beta) {
    const Rat g = gamma(beta);
    const Rat& b = beta.value();
    return Interval::open((g + Rat(1)) / b, (b + Rat(1)) / b);
}

namespace {

// Colors for the expanding-dynamics search. On-path hits mean a reachable
// cycle, which certifies membership; Out states died on every branch, which
// is depth-independent and safe to cache.
enum class Color : unsigned char { OnPath = 1, In = 2, Out = 3 };

struct MembershipSearch {
    const Rat beta;
    const Rat hull_max;
    const std::array<Rat, 3> digits;
    const bool integer_base;
    std::map<Rat, Color> color;

    Membership::Kind explore(const Rat& x, int depth) {
        if (x.sign() < 0 || x > hull_max) return Membership::Kind::Out;
        if (x.is_zero() || x == hull_max) return Membership::Kind::In;
        auto it = color.find(x);
        if (it != color.end()) {
            if (it->second == Color::Out) return Membership::Kind::Out;
            return Membership::Kind::In;  // cached In, or a cycle through the current path
        }
        if (!integer_base && depth <= 0) return Membership::Kind::Unknown;
        color.emplace(x, Color::OnPath);
        bool unknown = false;
        Membership::Kind result = Membership::Kind::Out;
        const Rat bx = beta * x;
        for (const Rat& d : digits) {
            const Membership::Kind r = explore(bx - d, depth - 1);
            if (r == Membership::Kind::In) {
                result = Membership::Kind::In;
                break;
            }
            if (r == Membership::Kind::Unknown) unknown = true;
        }
        if (result == Membership::Kind::In) {
            color[x] = Color::In;
        } else if (unknown) {
            color.erase(x);
            result = Membership::Kind::Unknown;
        } else {
            color[x] = Color::Out;
        }
        return result;
    }
};

}  // namespace

Membership decide_membership(const Beta& beta, const Rat& x, int max_depth) {
    if (max_depth < 1) throw Error("max_depth must be >= 1");
    MembershipSearch search{beta.value(),
                            gamma(beta),
                            {Rat(0), Rat(1), beta.value() + Rat(1)},
                            beta.is_integer(),
                            {}};
    switch (search.explore(x, max_depth)) {
        case Membership::Kind::In: return Membership::make_in();
        case Membership::Kind::Out: return Membership::make_out();
        default: return Membership::unknown(max_depth);
    }
}

}  // namespace ebeta
