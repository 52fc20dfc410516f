#pragma once

#include <string>
#include <vector>

#include "ebeta/geometry.hpp"

namespace ebeta {

/// Symbolic difference digits Ω − Ω = {0, ±1, ±β, ±(β+1)}; stored as tags so one
/// vector can be re-evaluated at many β. Enumeration order is the tie-break order.
enum class DiffDigit : unsigned char {
    Zero = 0,
    PlusOne,
    MinusOne,
    PlusBeta,
    MinusBeta,
    PlusBetaPlusOne,
    MinusBetaPlusOne,
};

/// Coefficient vector of Σ d_i β^i; index 0 is the constant term.
using DiffVector = std::vector<DiffDigit>;

Rat diff_value(const Beta& beta, DiffDigit d);

/// Exact polynomial evaluation Σ d_i β^i.
Rat eval_diff_vector(const Beta& beta, const DiffVector& v);

/// Tokens "0", "+1", "-1", "+B", "-B", "+B1", "-B1" joined by spaces, index 0 first.
std::string diff_vector_str(const DiffVector& v);

struct SpectrumResult {
    Rat min_value;                 // min over nonzero values, all lengths ≤ N
    DiffVector witness;            // evaluates to ±min_value exactly
    int length = 0;                // witness length
    std::vector<Rat> per_length;   // per_length[k] = minimum at length k+1, leading digit ≠ 0
    std::vector<DiffVector> per_length_witness;
};

/// Minimum of |Σ d_i β^i| over nonzero-valued vectors of length ≤ max_len.
/// Branch and bound from the most significant index with the exact tail bound
/// (β+1)(β^k − 1)/(β−1); by symmetry the leading digit is taken positive.
/// Ties prefer the shortest length, then the lexicographically smallest witness.
SpectrumResult spectrum_search(const Beta& beta, int max_len);

struct UnitLowerBoundCheck {
    bool ok = false;
    DiffVector counterexample;  // set when ok is false
};

/// Exhaustively confirms that every nonzero sum with nonzero leading digit and
/// length ≤ max_len has absolute value ≥ 1 (reuses the pruned enumeration).
UnitLowerBoundCheck verify_unit_lower_bound(const Beta& beta, int max_len);

}  // namespace ebeta
