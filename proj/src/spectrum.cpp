#include "ebeta/spectrum.hpp"

#include <algorithm>
#include <array>

namespace ebeta {

Rat diff_value(const Beta& beta, DiffDigit d) {
    const Rat& b = beta.value();
    switch (d) {
        case DiffDigit::Zero: return Rat(0);
        case DiffDigit::PlusOne: return Rat(1);
        case DiffDigit::MinusOne: return Rat(-1);
        case DiffDigit::PlusBeta: return b;
        case DiffDigit::MinusBeta: return -b;
        case DiffDigit::PlusBetaPlusOne: return b + Rat(1);
        default: return -(b + Rat(1));
    }
}

Rat eval_diff_vector(const Beta& beta, const DiffVector& v) {
    Rat acc(0), pw(1);
    for (DiffDigit d : v) {
        acc += diff_value(beta, d) * pw;
        pw *= beta.value();
    }
    return acc;
}

std::string diff_vector_str(const DiffVector& v) {
    static const char* tok[7] = {"0", "+1", "-1", "+B", "-B", "+B1", "-B1"};
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += tok[static_cast<size_t>(v[i])];
    }
    return s;
}

namespace {

constexpr std::array<DiffDigit, 7> kAllDigits = {
    DiffDigit::Zero,          DiffDigit::PlusOne,          DiffDigit::MinusOne,
    DiffDigit::PlusBeta,      DiffDigit::MinusBeta,        DiffDigit::PlusBetaPlusOne,
    DiffDigit::MinusBetaPlusOne};

constexpr std::array<DiffDigit, 3> kPositiveDigits = {
    DiffDigit::PlusOne, DiffDigit::PlusBeta, DiffDigit::PlusBetaPlusOne};

// Alternating vector (+1, -(β+1), +(β+1), ...) read from the top index down;
// telescopes to ±1 exactly, giving a valid incumbent the search must beat.
DiffVector unit_incumbent(int n) {
    DiffVector v(static_cast<size_t>(n), DiffDigit::Zero);
    v[static_cast<size_t>(n - 1)] = DiffDigit::PlusOne;
    bool plus = false;
    for (int i = n - 2; i >= 0; --i) {
        v[static_cast<size_t>(i)] = plus ? DiffDigit::PlusBetaPlusOne : DiffDigit::MinusBetaPlusOne;
        plus = !plus;
    }
    return v;
}

struct PerLengthSearch {
    const Beta& beta;
    int n;
    std::vector<Rat> pow;       // β^i
    std::vector<Rat> tail_max;  // tail_max[k] = (β+1)·Σ_{i<k} β^i
    Rat best;
    DiffVector best_vec;        // index 0 first
    DiffVector assign;

    PerLengthSearch(const Beta& b, int len) : beta(b), n(len), assign(static_cast<size_t>(len)) {
        pow.reserve(static_cast<size_t>(n));
        tail_max.reserve(static_cast<size_t>(n) + 1);
        Rat p(1);
        tail_max.push_back(Rat(0));
        for (int i = 0; i < n; ++i) {
            pow.push_back(p);
            tail_max.push_back(tail_max.back() + (beta.value() + Rat(1)) * p);
            p *= beta.value();
        }
        best_vec = unit_incumbent(n);
        best = eval_diff_vector(beta, best_vec).abs();
        if (best != Rat(1)) throw AssertionFailure("incumbent must telescope to 1");
    }

    void consider(const Rat& value) {
        if (value.is_zero()) return;
        const Rat a = value.abs();
        if (a > best) return;
        if (a < best || assign < best_vec) {
            best = a;
            best_vec = assign;
        }
    }

    void descend(int pos, const Rat& partial) {
        if (pos < 0) {
            consider(partial);
            return;
        }
        if (partial.abs() - tail_max[static_cast<size_t>(pos) + 1] >= best) return;
        for (DiffDigit d : kAllDigits) {
            assign[static_cast<size_t>(pos)] = d;
            descend(pos - 1, partial + diff_value(beta, d) * pow[static_cast<size_t>(pos)]);
        }
        assign[static_cast<size_t>(pos)] = DiffDigit::Zero;
    }

    void run() {
        const int top = n - 1;
        for (DiffDigit d : kPositiveDigits) {
            assign[static_cast<size_t>(top)] = d;
            descend(top - 1, diff_value(beta, d) * pow[static_cast<size_t>(top)]);
        }
    }
};

}  // namespace

SpectrumResult spectrum_search(const Beta& beta, int max_len) {
    if (max_len < 1) throw Error("max_len must be >= 1");
    SpectrumResult result;
    for (int n = 1; n <= max_len; ++n) {
        PerLengthSearch search(beta, n);
        search.run();
        result.per_length.push_back(search.best);
        result.per_length_witness.push_back(search.best_vec);
        if (n == 1 || search.best < result.min_value) {
            result.min_value = search.best;
            result.witness = search.best_vec;
            result.length = n;
        }
    }
    return result;
}

UnitLowerBoundCheck verify_unit_lower_bound(const Beta& beta, int max_len) {
    const SpectrumResult r = spectrum_search(beta, max_len);
    for (size_t i = 0; i < r.per_length.size(); ++i)
        if (r.per_length[i] < Rat(1)) return {false, r.per_length_witness[i]};
    return {true, {}};
}

}  // namespace ebeta
