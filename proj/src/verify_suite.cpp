#include "ebeta/verify_suite.hpp"

#include <algorithm>
#include <random>

#include "ebeta/codings.hpp"
#include "ebeta/embedding.hpp"
#include "ebeta/symbolic.hpp"

namespace ebeta {

namespace {

CheckResult check_overlap_identity(const Beta& beta, int levels) {
    CheckResult r{"overlap_identity", false, {}};
    try {
        const OverlapReport report = verify_overlap_identity(beta, levels);
        r.ok = true;
        nlohmann::json gaps = nlohmann::json::array();
        for (const Rat& g : report.gaps) gaps.push_back(g.str());
        r.details["levels"] = levels;
        r.details["gaps"] = gaps;
        r.details["nominal_final_bound"] = report.final_bound.str();
        r.details["final_gap_within_nominal_bound"] = report.final_gap_within_bound;
    } catch (const AssertionFailure& e) {
        r.ok = false;
        r.details["error"] = e.what();
    }
    return r;
}

CheckResult check_asymmetry(const Beta& beta) {
    CheckResult r{"asymmetry", true, {}};
    const Rat hull_max = gamma(beta);
    std::mt19937 rng(0x5eed0001);
    std::uniform_int_distribution<long> den_dist(1, 64);
    int checked = 0;
    for (int i = 0; i < 100; ++i) {
        const long q = den_dist(rng);
        const Rat top = Rat(2) * hull_max * Rat(q);
        std::uniform_int_distribution<long> num_dist(0, std::max(1L, static_cast<long>(top.to_double())));
        const Rat c = Rat(num_dist(rng), q);
        const AsymmetryWitness w = asymmetry_witness(beta, c);
        const bool point_in = decide_membership(beta, w.point).in();
        const bool image_out = w.image.sign() < 0 || w.image > hull_max ||
                               (w.hole && w.hole->contains(w.image)) ||
                               decide_membership(beta, w.image).out();
        if (!point_in || !image_out) {
            r.ok = false;
            r.details["first_failure"] = "c=" + c.str();
            break;
        }
        ++checked;
    }
    r.details["checked"] = checked;
    return r;
}

CheckResult check_hole_image(const Beta& beta) {
    CheckResult r{"not_totally_self_similar", false, {}};
    try {
        const HoleImageWitness w = not_totally_self_similar_witness(beta);
        r.ok = decide_membership(beta, w.point).in();
        r.details["point"] = w.point.str();
        r.details["coding"] = w.coding.str();
        r.details["hole_image"] = nlohmann::json::array({w.hole_image.lo.str(), w.hole_image.hi.str()});
    } catch (const AssertionFailure& e) {
        r.details["error"] = e.what();
    }
    return r;
}

CheckResult check_power_of_two(const Beta& beta) {
    CheckResult r{"power_of_two_sample", true, {}};
    std::mt19937 rng(0x5eed0002);
    std::uniform_int_distribution<int> pre_len(0, 8);
    std::uniform_int_distribution<int> per_len(1, 6);
    std::uniform_int_distribution<int> digit(0, 2);
    int finite = 0, continuum = 0;
    for (int i = 0; i < 400 && r.ok; ++i) {
        Word pre(static_cast<size_t>(pre_len(rng)));
        Word per(static_cast<size_t>(per_len(rng)));
        for (Digit& d : pre) d = static_cast<Digit>(digit(rng));
        for (Digit& d : per) d = static_cast<Digit>(digit(rng));
        const EPCoding c = EPCoding::make(pre, per);
        const CodingCount count = count_codings(c);
        if (count.continuum) {
            ++continuum;
            continue;
        }
        ++finite;
        if (count.m <= 4) {
            const int depth = static_cast<int>(c.preperiod().size()) +
                              2 * count.m * static_cast<int>(c.period().size()) + 4;
            const size_t expect = size_t{1} << count.m;
            if (enumerate_codings(c, depth).size() != expect) {
                r.ok = false;
                r.details["first_failure"] = c.str();
            }
        }
    }
    r.details["finite"] = finite;
    r.details["continuum"] = continuum;
    return r;
}

CheckResult check_map_collisions(const Beta& beta, int max_level) {
    CheckResult r{"map_collision_law", true, {}};
    const TransitionMatrix a = coding_transitions();
    for (int n = 1; n <= max_level; ++n) {
        const mpz_class expect = count_words(a, n);
        const size_t got = level_offsets(beta, n).size();
        if (mpz_class(static_cast<unsigned long>(got)) != expect) {
            r.ok = false;
            r.details["first_failure"] = "level " + std::to_string(n);
            break;
        }
    }
    r.details["levels"] = max_level;
    return r;
}

}  // namespace

std::vector<CheckResult> run_verification_suite(const Beta& beta, int level) {
    const int overlap_levels = std::min(level, 8);
    const int collision_levels = std::min(level, 5);
    return {
        check_overlap_identity(beta, overlap_levels),
        check_asymmetry(beta),
        check_hole_image(beta),
        check_power_of_two(beta),
        check_map_collisions(beta, collision_levels),
    };
}

}  // namespace ebeta
