#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ebeta/codings.hpp"
#include "ebeta/geometry.hpp"

namespace ebeta {

/// Candidate affine self-embedding g(x) = mu·x + b.
struct CandidateMap {
    Rat mu;
    Rat b;

    Rat operator()(const Rat& x) const { return mu * x + b; }
};

/// The candidate is one of the maps f_w generated by the system.
struct GeneratingVerdict {
    Word word;
};

/// A concrete point of the attractor whose image provably escapes it, plus the
/// open gap containing the image when one is locatable. Interval-evidence
/// refutations (image of the level set leaves the level set without any
/// endpoint escaping) carry no point witness.
struct RefutationEvidence {
    std::optional<EPCoding> witness;
    std::optional<Rat> point;
    std::optional<Rat> image;
    std::optional<Interval> hole;
    int depth = 0;
    std::string method;  // "diameter" | "membership" | "interval"
};

struct UndeterminedVerdict {
    int depth = 0;
};

using ClassifyResult = std::variant<GeneratingVerdict, RefutationEvidence, UndeterminedVerdict>;

/// Lexicographically smallest w ∈ Ω^n with f_w(0) = b exactly, if any
/// (depth-first with exact interval pruning of the partial remainder).
std::optional<Word> word_for_offset(const Beta& beta, const Rat& b, int n);

/// Classifies g: (a) exact generating test when mu = β^(−n) and b expands as a
/// digit offset; (b) witness search over the net f_w(0), f_w(γ) (|w| growing to
/// max_depth, plus multi-coding samples) with exact membership certificates;
/// (c) level-set containment as a necessary condition. |mu| > 1 is refuted by
/// diameter comparison; mu = 0 throws InvalidMu.
ClassifyResult classify_map(const Beta& beta, const CandidateMap& g, int max_depth = 8);

/// Which first-level piece the image hull of g lands in, by the min/max tests.
enum class BranchCase { SubF0, SubF1, SubFB, Inconclusive };
BranchCase branch_case(const Beta& beta, const CandidateMap& g);

/// Witness that the reflection x ↦ −x + c cannot map the attractor into itself:
/// an attractor point whose image is provably outside (beyond the hull, or in
/// the biggest hole when c = γ).
struct AsymmetryWitness {
    EPCoding witness;
    Rat point;
    Rat image;
    std::optional<Interval> hole;
};
AsymmetryWitness asymmetry_witness(const Beta& beta, const Rat& c);

/// Level-set convergence report for the overlap identity
/// f_0(E) ∩ f_1(E) = f_{0B}(E) = f_{11}(E): at every level n ≤ N the right side
/// f_{11}(level set) is contained in the left intersection and the total-length
/// gap never grows. Containment or monotonicity failures throw AssertionFailure.
/// The final gap is also compared against the nominal bound 3·γ·β^(−N−1) and the
/// outcome is reported (the measured decay rate is (r_A/β)^n, so the nominal
/// bound is not met for large N; see the report fields).
struct OverlapReport {
    std::vector<Rat> gaps;          // gaps[n] = |L_n| − |R_n|
    Rat final_bound;                // 3·γ·β^(−N−1)
    bool final_gap_within_bound = false;
};
OverlapReport verify_overlap_identity(const Beta& beta, int levels);

/// The image of the biggest hole under f_0 meets the attractor: returns the
/// point x = f_{10}(β^(−2)) (coding 1001 0^∞) lying strictly inside f_0(H),
/// which shows the system is not totally self-similar.
struct HoleImageWitness {
    Rat point;
    EPCoding coding;
    Interval hole_image;
};
HoleImageWitness not_totally_self_similar_witness(const Beta& beta);

}  // namespace ebeta
