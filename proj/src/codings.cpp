#include "ebeta/codings.hpp"

#include <algorithm>
#include <optional>

#include "ebeta/symbolic.hpp"

namespace ebeta {

namespace {

Word primitive_root(const Word& v) {
    const size_t n = v.size();
    for (size_t d = 1; d <= n / 2; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (size_t i = d; i < n && ok; ++i) ok = v[i] == v[i % d];
        if (ok) return Word(v.begin(), v.begin() + static_cast<long>(d));
    }
    return v;
}

bool pair_is_block(Digit a, Digit b) {
    return (a == Digit::D1 && b == Digit::D1) || (a == Digit::D0 && b == Digit::DB);
}

}  // namespace

EPCoding EPCoding::make(Word preperiod, Word period) {
    if (period.empty()) throw ParseError("empty period");
    Word per = primitive_root(period);
    Word pre = std::move(preperiod);
    while (!pre.empty() && pre.back() == per.back()) {
        per.insert(per.begin(), per.back());
        per.pop_back();
        pre.pop_back();
    }
    return EPCoding(std::move(pre), std::move(per));
}

EPCoding EPCoding::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    const auto bar = s.find('|');
    if (bar == std::string::npos) throw ParseError("coding needs a '|' separator: " + text);
    if (s.find('|', bar + 1) != std::string::npos) throw ParseError("multiple '|' in: " + text);
    return make(parse_word(s.substr(0, bar)), parse_word(s.substr(bar + 1)));
}

Rat eval_coding(const Beta& beta, const EPCoding& c) {
    const Rat inv = Rat(1) / beta.value();
    Rat head(0), pw(1);
    for (Digit d : c.preperiod()) {
        pw *= inv;
        head += digit_value(beta, d) * pw;
    }
    Rat body(0), qw(1);
    for (Digit d : c.period()) {
        qw *= inv;
        body += digit_value(beta, d) * qw;
    }
    // tail = body / (1 - β^(-L)), then shifted below the preperiod
    const Rat tail = body / (Rat(1) - qw);
    return head + pw * tail;
}

namespace {

// First block 11/0B at position >= pos, or nullopt if none ever occurs.
// Scanning one full period past max(pos, preperiod) covers every phase.
std::optional<size_t> next_block(const EPCoding& c, size_t pos) {
    const size_t limit = std::max(pos, c.preperiod().size()) + c.period().size();
    for (size_t p = pos; p < limit; ++p)
        if (pair_is_block(c.at(p), c.at(p + 1))) return p;
    return std::nullopt;
}

}  // namespace

CodingCount count_codings(const EPCoding& c) {
    size_t pos = 0;
    int m = 0;
    for (;;) {
        const auto hit = next_block(c, pos);
        if (!hit) return CodingCount::finite(m);
        if (*hit >= c.preperiod().size()) return CodingCount::make_continuum();
        ++m;
        pos = *hit + 2;
    }
}

std::set<Word> enumerate_codings(const EPCoding& c, int depth) {
    if (depth < 1) throw Error("depth must be >= 1");
    const size_t n = static_cast<size_t>(depth);
    std::vector<size_t> blocks;
    size_t pos = 0;
    for (;;) {
        const auto hit = next_block(c, pos);
        if (!hit || *hit >= n) break;
        blocks.push_back(*hit);
        pos = *hit + 2;
    }
    if (blocks.size() > 30) throw Error("enumeration too large: 2^" + std::to_string(blocks.size()));
    std::set<Word> out;
    for (size_t mask = 0; mask < (size_t{1} << blocks.size()); ++mask) {
        Word w(n);
        for (size_t i = 0; i < n; ++i) w[i] = c.at(i);
        for (size_t bi = 0; bi < blocks.size(); ++bi) {
            if (!(mask & (size_t{1} << bi))) continue;
            const size_t p = blocks[bi];
            const bool was_ones = c.at(p) == Digit::D1;
            w[p] = was_ones ? Digit::D0 : Digit::D1;
            if (p + 1 < n) w[p + 1] = was_ones ? Digit::DB : Digit::D1;
        }
        out.insert(std::move(w));
    }
    return out;
}

bool is_unique(const EPCoding& c) {
    return !next_block(c, 0).has_value();
}

namespace {

Word auto_prefix(int n) {
    const TransitionMatrix m = unique_coding_transitions();
    auto can_finish = [&](Digit d, int steps_left) {
        // steps_left transitions remain after d; the word must end on B
        std::array<bool, 3> now{false, false, true};
        for (int s = 0; s < steps_left; ++s) {
            std::array<bool, 3> prev{};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (m.e[i][j] && now[j]) prev[i] = true;
            now = prev;
        }
        return now[static_cast<size_t>(d)];
    };
    Word w;
    for (int i = 0; i < n; ++i) {
        for (Digit d : {Digit::D0, Digit::D1, Digit::DB}) {
            if (!w.empty() && m.entry(w.back(), d) == 0) continue;
            if (!can_finish(d, n - 1 - i)) continue;
            w.push_back(d);
            break;
        }
        if (static_cast<int>(w.size()) != i + 1) throw Error("no admissible prefix exists");
    }
    return w;
}

}  // namespace

EPCoding multi_coding_sample(int n, int m) {
    if (n < 1 || m < 0) throw Error("need n >= 1 and m >= 0");
    return multi_coding_sample(n, m, auto_prefix(n));
}

EPCoding multi_coding_sample(int n, int m, const Word& prefix) {
    if (n < 1 || m < 0) throw Error("need n >= 1 and m >= 0");
    if (static_cast<int>(prefix.size()) != n)
        throw InvalidPrefix("prefix length " + std::to_string(prefix.size()) + ", expected " +
                            std::to_string(n));
    if (prefix.back() != Digit::DB) throw InvalidPrefix("prefix must end in B");
    if (!admissible(prefix, unique_coding_transitions()))
        throw InvalidPrefix("prefix contains 11 or 0B: " + word_str(prefix));
    Word pre = prefix;
    for (int i = 0; i < m; ++i) {
        pre.push_back(Digit::D0);
        pre.push_back(Digit::DB);
    }
    return EPCoding::make(std::move(pre), Word{Digit::DB});
}

}  // namespace ebeta
