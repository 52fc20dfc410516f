#include "ebeta/embedding.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ebeta {

namespace {

// Largest possible value of a digit tail of the given length:
// Σ_{i=1..len} (β+1)·β^(−i).
Rat max_tail(const Beta& beta, int len) {
    const Rat inv = Rat(1) / beta.value();
    return gamma(beta) * (Rat(1) - inv.pow(len));
}

bool expand_offset(const Beta& beta, const Rat& target, int remaining, Word& acc) {
    if (remaining == 0) return target.is_zero();
    if (target.sign() < 0 || target > max_tail(beta, remaining)) return false;
    for (Digit d : {Digit::D0, Digit::D1, Digit::DB}) {
        // strip one digit: target = (value(d) + rest)/β
        const Rat rest = target * beta.value() - digit_value(beta, d);
        acc.push_back(d);
        if (expand_offset(beta, rest, remaining - 1, acc)) return true;
        acc.pop_back();
    }
    return false;
}

}  // namespace

std::optional<Word> word_for_offset(const Beta& beta, const Rat& b, int n) {
    if (n < 0) throw Error("negative length");
    Word acc;
    acc.reserve(static_cast<size_t>(n));
    if (expand_offset(beta, b, n, acc)) return acc;
    return std::nullopt;
}

namespace {

// Net points come with their codings so refutations are reproducible claims.
struct NetPoint {
    Rat value;
    EPCoding coding;
};

std::optional<Interval> locate_hole(const Beta& beta, const Rat& y, int max_level) {
    if (y.sign() < 0 || y > gamma(beta)) return std::nullopt;
    for (int k = 1; k <= max_level; ++k)
        for (const Interval& h : holes(beta, k))
            if (h.contains(y)) return h;
    return std::nullopt;
}

class WitnessSearch {
public:
    WitnessSearch(const Beta& beta, const CandidateMap& g, int max_depth)
        : beta_(beta), g_(g), max_depth_(max_depth), hull_max_(gamma(beta)) {}

    // Exact escape certificate: outside the hull, or membership search says Out.
    bool escapes(const Rat& y) {
        if (y.sign() < 0 || y > hull_max_) return true;
        auto it = cache_.find(y);
        if (it == cache_.end())
            it = cache_.emplace(y, decide_membership(beta_, y)).first;
        return it->second.out();
    }

    std::optional<RefutationEvidence> test(const NetPoint& p, int level) {
        const Rat y = g_(p.value);
        if (!escapes(y)) return std::nullopt;
        return RefutationEvidence{p.coding, p.value, y, locate_hole(beta_, y, max_depth_), level,
                                  "membership"};
    }

private:
    const Beta& beta_;
    const CandidateMap& g_;
    int max_depth_;
    Rat hull_max_;
    std::map<Rat, Membership> cache_;
};

void each_word(const Beta& beta, int len, const std::function<void(const Word&, const AffineMap&)>& fn) {
    Word w(static_cast<size_t>(len), Digit::D0);
    std::function<void(int, const AffineMap&)> rec = [&](int pos, const AffineMap& map) {
        if (pos == len) {
            fn(w, map);
            return;
        }
        for (Digit d : {Digit::D0, Digit::D1, Digit::DB}) {
            w[static_cast<size_t>(pos)] = d;
            rec(pos + 1, map.after(digit_map(beta, d)));
        }
    };
    rec(0, AffineMap{});
}

}  // namespace

ClassifyResult classify_map(const Beta& beta, const CandidateMap& g, int max_depth) {
    if (max_depth < 1) throw Error("max_depth must be >= 1");
    if (g.mu.is_zero()) throw InvalidMu("mu must be nonzero");
    const Rat hull_max = gamma(beta);

    if (g.mu.abs() > Rat(1)) {
        // The image diameter |mu|·γ exceeds γ, so an endpoint image escapes the hull.
        for (const auto& [x, coding] :
             {std::pair<Rat, EPCoding>{Rat(0), EPCoding::parse("|0")},
              std::pair<Rat, EPCoding>{hull_max, EPCoding::parse("|B")}}) {
            const Rat y = g(x);
            if (y.sign() < 0 || y > hull_max)
                return RefutationEvidence{coding, x, y, std::nullopt, 0, "diameter"};
        }
        throw AssertionFailure("diameter refutation must produce an endpoint witness");
    }

    if (g.mu.sign() > 0) {
        Rat pw(1);
        for (int n = 0; n <= max_depth; ++n) {
            if (g.mu * pw == Rat(1)) {
                if (auto w = word_for_offset(beta, g.b, n)) return GeneratingVerdict{*w};
                break;
            }
            pw *= beta.value();
        }
    }

    WitnessSearch search(beta, g, max_depth);
    std::optional<int> interval_violation;
    for (int k = 0; k <= max_depth; ++k) {
        std::optional<RefutationEvidence> found;
        each_word(beta, k, [&](const Word& w, const AffineMap& fw) {
            if (found) return;
            Word per0{Digit::D0}, perB{Digit::DB};
            if (auto r = search.test({fw.offset, EPCoding::make(w, per0)}, k)) found = r;
            if (!found)
                if (auto r = search.test({fw(hull_max), EPCoding::make(w, perB)}, k)) found = r;
        });
        if (found) return *found;
        if (k >= 1) {
            for (int m : {1, 2}) {
                const EPCoding c = multi_coding_sample(k, m);
                if (auto r = search.test({eval_coding(beta, c), c}, k)) return *r;
            }
        }
        if (!interval_violation) {
            const IntervalSet dk = level_intervals(beta, k);
            if (!dk.contains(dk.map(AffineMap{g.mu, g.b}))) interval_violation = k;
        }
    }
    if (interval_violation)
        return RefutationEvidence{std::nullopt, std::nullopt,    std::nullopt,
                                  std::nullopt, *interval_violation, "interval"};
    return UndeterminedVerdict{max_depth};
}

BranchCase branch_case(const Beta& beta, const CandidateMap& g) {
    if (g.mu.abs() > Rat(1)) throw InvalidMu("branch classification needs |mu| <= 1");
    const Rat hull_max = gamma(beta);
    const Rat a = g.b;
    const Rat b2 = g.mu * hull_max + g.b;
    const Rat lo = std::min(a, b2);
    const Rat hi = std::max(a, b2);
    const Rat& bv = beta.value();
    const Rat f10_at_zero = Rat(1) / bv;                       // f_1(f_0(0))
    const Rat f01_at_max = (hull_max + Rat(1)) / (bv * bv);    // f_0(f_1(γ))
    const Rat fB_at_zero = (bv + Rat(1)) / bv;                 // f_{β+1}(0)
    const Rat f1_at_max = (hull_max + Rat(1)) / bv;            // f_1(γ)
    if (hi < f10_at_zero) return BranchCase::SubF0;
    if (f01_at_max < lo && lo < fB_at_zero) return BranchCase::SubF1;
    if (lo > f1_at_max) return BranchCase::SubFB;
    return BranchCase::Inconclusive;
}

AsymmetryWitness asymmetry_witness(const Beta& beta, const Rat& c) {
    const Rat hull_max = gamma(beta);
    if (c > hull_max) {
        // image of 0 lands beyond the hull
        return {EPCoding::parse("|0"), Rat(0), c, std::nullopt};
    }
    if (c < hull_max) {
        // image of γ lands below 0
        return {EPCoding::parse("|B"), hull_max, c - hull_max, std::nullopt};
    }
    // c = γ: the point f_{1B}(0) = (2β+1)/β² reflects into the biggest hole.
    const Rat& b = beta.value();
    const Rat x = (Rat(2) * b + Rat(1)) / (b * b);
    const Rat image = c - x;
    const Interval h = fundamental_hole(beta);
    if (!(h.lo < image && image < h.hi))
        throw AssertionFailure("reflection witness must land in the biggest hole");
    return {EPCoding::parse("1B|0"), x, image, h};
}

OverlapReport verify_overlap_identity(const Beta& beta, int levels) {
    if (levels < 0) throw Error("levels must be >= 0");
    const AffineMap f0 = digit_map(beta, Digit::D0);
    const AffineMap f1 = digit_map(beta, Digit::D1);
    const AffineMap f11 = f1.after(f1);
    OverlapReport report;
    for (int n = 0; n <= levels; ++n) {
        const IntervalSet dn = level_intervals(beta, n);
        const IntervalSet left = dn.map(f0).intersect(dn.map(f1));
        const IntervalSet right = dn.map(f11);
        if (!left.contains(right))
            throw AssertionFailure("overlap identity containment failed at level " +
                                   std::to_string(n));
        const Rat gap = left.total_length() - right.total_length();
        if (!report.gaps.empty() && gap > report.gaps.back())
            throw AssertionFailure("overlap gap increased at level " + std::to_string(n));
        report.gaps.push_back(gap);
    }
    report.final_bound = Rat(3) * gamma(beta) * beta.value().pow(-static_cast<long>(levels) - 1);
    report.final_gap_within_bound = report.gaps.back() <= report.final_bound;
    return report;
}

HoleImageWitness not_totally_self_similar_witness(const Beta& beta) {
    const Rat& b = beta.value();
    const Rat x = b.pow(-4) + b.pow(-1);  // f_{10}(β^(−2))
    const Rat lo = (gamma(beta) + Rat(1)) / (b * b);
    const Rat hi = (b + Rat(1)) / (b * b);
    if (!(lo < x && x < hi))
        throw AssertionFailure("hole-image witness containment failed");
    return {x, EPCoding::parse("1001|0"), Interval::open(lo, hi)};
}

}  // namespace ebeta
