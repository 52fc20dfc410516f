#pragma once

#include <set>
#include <string>

#include "ebeta/geometry.hpp"
#include "ebeta/words.hpp"

namespace ebeta {

/// Eventually periodic digit sequence preperiod·period^∞ over {0, 1, B}.
/// Canonical form: the period is primitive and the preperiod is minimal
/// (trailing digits equal to the period's last digit are rotated into it),
/// so equal sequences compare equal.
class EPCoding {
public:
    /// Canonicalizes. The period must be nonempty.
    static EPCoding make(Word preperiod, Word period);

    /// Text grammar: digits 0/1/B, preperiod and period separated by '|',
    /// whitespace ignored. "11|B" is 11(β+1)^∞, "|0B" is (0(β+1))^∞.
    static EPCoding parse(const std::string& text);

    const Word& preperiod() const { return pre_; }
    const Word& period() const { return per_; }

    /// Digit at 0-based position i of the infinite sequence.
    Digit at(size_t i) const {
        return i < pre_.size() ? pre_[i] : per_[(i - pre_.size()) % per_.size()];
    }

    std::string str() const { return word_str(pre_) + "|" + word_str(per_); }

    friend bool operator==(const EPCoding& a, const EPCoding& b) {
        return a.pre_ == b.pre_ && a.per_ == b.per_;
    }
    friend bool operator<(const EPCoding& a, const EPCoding& b) {
        return a.pre_ != b.pre_ ? a.pre_ < b.pre_ : a.per_ < b.per_;
    }

private:
    EPCoding(Word pre, Word per) : pre_(std::move(pre)), per_(std::move(per)) {}
    Word pre_;
    Word per_;
};

/// Exact value Σ d_i β^(−i), the periodic tail summed in closed form.
Rat eval_coding(const Beta& beta, const EPCoding& c);

/// Number of codings reachable from c through the exchange 11 ~ 0B, as counted
/// by the sequential block procedure: Finite(m) means exactly 2^m codings.
struct CodingCount {
    bool continuum = false;
    int m = 0;

    static CodingCount finite(int m) { return {false, m}; }
    static CodingCount make_continuum() { return {true, 0}; }
    friend bool operator==(const CodingCount& a, const CodingCount& b) {
        return a.continuum == b.continuum && (a.continuum || a.m == b.m);
    }
};

/// Scans left to right for blocks 11 / 0B, consuming each found block and
/// continuing after it; a block starting in the periodic zone recurs every
/// period, which is the non-termination case. The answer depends only on the
/// symbolic sequence, not on β.
CodingCount count_codings(const EPCoding& c);

/// Length-`depth` prefixes of the codings produced by independently exchanging
/// each consumed block 11 ↔ 0B. A block straddling the cut is resolved by
/// extending the prefix by one digit before cutting, so no variant is lost.
std::set<Word> enumerate_codings(const EPCoding& c, int depth);

/// True iff the whole sequence (preperiod, period and the wraparound) avoids
/// the blocks 11 and 0B, i.e. is admissible for the unique-coding matrix.
bool is_unique(const EPCoding& c);

/// Builds prefix·(0B)^m·B^∞ where the length-n prefix avoids 11/0B and ends in
/// B; such points carry exactly 2^m codings. With no prefix given, the
/// lexicographically smallest valid prefix is chosen (digit order 0 < 1 < B).
EPCoding multi_coding_sample(int n, int m);
EPCoding multi_coding_sample(int n, int m, const Word& prefix);

}  // namespace ebeta
