#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "ebeta/errors.hpp"

namespace ebeta {

/// Exact rational scalar. Always in lowest terms with positive denominator;
/// every operation is exact, nothing ever rounds.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(int n) : q_(n) {}
    Rat(long n) : q_(static_cast<signed long>(n)) {}
    Rat(long num, long den) : q_(num, den) {
        check_den();
        q_.canonicalize();
    }
    Rat(const mpz_class& num, const mpz_class& den) : q_(num, den) {
        check_den();
        q_.canonicalize();
    }
    explicit Rat(const mpz_class& n) : q_(n) {}

    /// Accepts "p/q" or "p" (base 10). Rejects zero denominators.
    static Rat parse(const std::string& text);

    /// Exact binary value of the double (no decimal rounding).
    static Rat from_double(double x) {
        Rat r;
        r.q_ = mpq_class(x);
        return r;
    }

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rat abs() const { return raw(::abs(q_)); }

    /// Exact power with integer exponent; negative exponents require a nonzero base.
    Rat pow(long e) const;

    double to_double() const { return q_.get_d(); }

    /// Always "p/q", including "2/1"; the denominator is never omitted.
    std::string str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

    friend Rat operator+(const Rat& a, const Rat& b) { return raw(a.q_ + b.q_); }
    friend Rat operator-(const Rat& a, const Rat& b) { return raw(a.q_ - b.q_); }
    friend Rat operator*(const Rat& a, const Rat& b) { return raw(a.q_ * b.q_); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (sgn(b.q_) == 0) throw Error("division by zero");
        return raw(a.q_ / b.q_);
    }
    Rat operator-() const { return raw(-q_); }
    Rat& operator+=(const Rat& o) {
        q_ += o.q_;
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        q_ -= o.q_;
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        q_ *= o.q_;
        return *this;
    }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) != 0; }
    friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) >= 0; }

private:
    // Results of mpq arithmetic on canonical operands are canonical already.
    static Rat raw(mpq_class q) {
        Rat r;
        r.q_ = std::move(q);
        return r;
    }
    void check_den() const {
        if (q_.get_den() == 0) throw ParseError("zero denominator");
    }

    mpq_class q_;
};

inline Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    const bool invert = e < 0;
    const unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (invert && is_zero()) throw Error("zero to a negative power");
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), k);
    return invert ? Rat(d, n) : Rat(n, d);
}

inline Rat Rat::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty rational");
    const auto slash = s.find('/');
    const std::string ns = slash == std::string::npos ? s : s.substr(0, slash);
    const std::string ds = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
    auto valid = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (!valid(ns) || !valid(ds)) throw ParseError("bad rational: " + text);
    mpz_class n(ns), d(ds);
    if (d == 0) throw ParseError("zero denominator: " + text);
    return Rat(n, d);
}

}  // namespace ebeta
