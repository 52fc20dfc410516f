#pragma once

#include <array>
#include <string>

#include "ebeta/geometry.hpp"
#include "ebeta/words.hpp"

namespace ebeta {

/// 3×3 zero/one transition matrix; rows and columns indexed by (D0, D1, DB),
/// entry(from, to) = 1 iff the two-letter block "from to" is allowed.
struct TransitionMatrix {
    std::array<std::array<int, 3>, 3> e{};

    int entry(Digit from, Digit to) const {
        return e[static_cast<size_t>(from)][static_cast<size_t>(to)];
    }
    friend bool operator==(const TransitionMatrix& a, const TransitionMatrix& b) {
        return a.e == b.e;
    }
};

/// Transition matrix of the full coding subshift: the only forbidden block is 0B.
TransitionMatrix coding_transitions();

/// Transition matrix of the unique-coding subshift: forbidden blocks 11 and 0B.
TransitionMatrix unique_coding_transitions();

/// True iff every adjacent pair of w is an allowed block of M.
bool admissible(const Word& w, const TransitionMatrix& m);

/// Number of admissible words of length n (n ≥ 1): sum of all entries of M^(n−1).
mpz_class count_words(const TransitionMatrix& m, int n);

/// Monic cubic with integer coefficients, leading coefficient first.
struct CubicPoly {
    std::array<mpz_class, 4> coeff{1, 0, 0, 0};

    Rat eval(const Rat& x) const;
    std::string str() const;
    friend bool operator==(const CubicPoly& a, const CubicPoly& b) { return a.coeff == b.coeff; }
};

/// det(xI − M) as a monic cubic.
CubicPoly char_poly(const TransitionMatrix& m);

/// A numeric value together with an error bound: the true quantity lies in
/// [value − err, value + err].
struct Enclosure {
    double value = 0;
    double err = 0;
};

/// Exact rational bracket around a polynomial root, p(lo) ≤ 0 ≤ p(hi).
struct RootBracket {
    Rat lo, hi;
    Enclosure approx() const;
};

/// Largest real root of p inside (1, 3], isolated by exact sign bisection to
/// width ≤ tol. Throws NoRootInBracket when the sign conditions on [1, 3] fail.
RootBracket spectral_radius(const CubicPoly& p, const Rat& tol = Rat(1, 1000000000000L));

/// log(r)/log(β) with the bracket and floating-point slack propagated.
Enclosure hausdorff_dimension(const RootBracket& r, const Beta& beta);

/// Natural-cover upper bound for the s-dimensional Hausdorff measure of the
/// attractor at level n: count_words(A, n) · (γ β^(−n))^s, s = log r_A / log β.
/// Only an upper bound is computed; no exact measure value is ever asserted.
Enclosure measure_upper_bound(const Beta& beta, int n);

}  // namespace ebeta
