#include "ebeta/symbolic.hpp"

#include <cmath>
#include <limits>

namespace ebeta {

TransitionMatrix coding_transitions() {
    return TransitionMatrix{{{{1, 1, 0}, {1, 1, 1}, {1, 1, 1}}}};
}

TransitionMatrix unique_coding_transitions() {
    return TransitionMatrix{{{{1, 1, 0}, {1, 0, 1}, {1, 1, 1}}}};
}

bool admissible(const Word& w, const TransitionMatrix& m) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (m.entry(w[i], w[i + 1]) == 0) return false;
    return true;
}

mpz_class count_words(const TransitionMatrix& m, int n) {
    if (n < 1) throw Error("count_words needs n >= 1");
    // Row vector of ones times M^(n-1), summed: exact integer arithmetic.
    std::array<mpz_class, 3> row{1, 1, 1};
    for (int step = 1; step < n; ++step) {
        std::array<mpz_class, 3> next{0, 0, 0};
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 3; ++i)
                if (m.e[i][j]) next[j] += row[i];
        row = std::move(next);
    }
    return row[0] + row[1] + row[2];
}

Rat CubicPoly::eval(const Rat& x) const {
    Rat acc(coeff[0]);
    for (int i = 1; i < 4; ++i) acc = acc * x + Rat(coeff[i]);
    return acc;
}

std::string CubicPoly::str() const {
    static const char* names[4] = {"x^3", "x^2", "x", ""};
    std::string s;
    for (int i = 0; i < 4; ++i) {
        const mpz_class& c = coeff[i];
        if (c == 0) continue;
        const bool first = s.empty();
        if (c < 0)
            s += first ? "-" : " - ";
        else if (!first)
            s += " + ";
        const mpz_class a = abs(c);
        if (a != 1 || i == 3) s += a.get_str();
        s += names[i];
    }
    return s.empty() ? "0" : s;
}

CubicPoly char_poly(const TransitionMatrix& m) {
    auto at = [&](int i, int j) { return mpz_class(m.e[i][j]); };
    const mpz_class tr = at(0, 0) + at(1, 1) + at(2, 2);
    const mpz_class minors = at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0) +
                             at(0, 0) * at(2, 2) - at(0, 2) * at(2, 0) +
                             at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1);
    const mpz_class det = at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
                          at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
                          at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    CubicPoly p;
    p.coeff = {mpz_class(1), -tr, minors, -det};
    return p;
}

Enclosure RootBracket::approx() const {
    const double a = lo.to_double();
    const double b = hi.to_double();
    const double mid = 0.5 * (a + b);
    // Half-width plus slack for the two double conversions.
    const double err = 0.5 * (b - a) + 4 * std::numeric_limits<double>::epsilon() * std::abs(mid) +
                       1e-300;
    return {mid, err};
}

RootBracket spectral_radius(const CubicPoly& p, const Rat& tol) {
    if (tol.sign() <= 0) throw Error("tolerance must be positive");
    Rat lo(1), hi(3);
    const int s_lo = p.eval(lo).sign();
    const int s_hi = p.eval(hi).sign();
    if (s_lo >= 0) throw NoRootInBracket("p(1) >= 0: no bracketed root in (1, 3]");
    if (s_hi < 0) throw NoRootInBracket("p(3) < 0: largest root escapes (1, 3]");
    if (s_hi == 0) return {hi, hi};
    while (hi - lo > tol) {
        const Rat mid = (lo + hi) / Rat(2);
        const int s = p.eval(mid).sign();
        if (s == 0) return {mid, mid};
        if (s < 0)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

Enclosure hausdorff_dimension(const RootBracket& r, const Beta& beta) {
    const double lg_beta = std::log(beta.value().to_double());
    const double vlo = std::log(r.lo.to_double()) / lg_beta;
    const double vhi = std::log(r.hi.to_double()) / lg_beta;
    const double value = 0.5 * (vlo + vhi);
    const double err = 0.5 * (vhi - vlo) +
                       16 * std::numeric_limits<double>::epsilon() * (std::abs(value) + 1);
    return {value, err};
}

Enclosure measure_upper_bound(const Beta& beta, int n) {
    if (n < 1) throw Error("measure_upper_bound needs n >= 1");
    const Enclosure s = hausdorff_dimension(spectral_radius(char_poly(coding_transitions())), beta);
    const double count = count_words(coding_transitions(), n).get_d();
    const double base = (gamma(beta) * beta.value().pow(-static_cast<long>(n))).to_double();
    // base < 1, so base^s is decreasing in s.
    const double vlo = count * std::pow(base, s.value + s.err);
    const double vhi = count * std::pow(base, s.value - s.err);
    const double value = 0.5 * (vlo + vhi);
    const double err = 0.5 * (vhi - vlo) +
                       32 * std::numeric_limits<double>::epsilon() * (std::abs(value) + 1);
    return {value, err};
}

}  // namespace ebeta
