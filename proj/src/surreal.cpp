#include "ts/surreal.hpp"

#include <cassert>
#include <optional>
#include <unordered_map>

#include "ts/error.hpp"

namespace ts::surreal
{

// ------------------------------------------------------------------- SignSeq

SignSeq SignSeq::parse(std::string_view text)
{
    std::vector<Sign> signs;
    signs.reserve(text.size());
    for (char c : text) {
        if (c == '+') {
            signs.push_back(Sign::plus);
        } else if (c == '-') {
            signs.push_back(Sign::minus);
        } else {
            throw InvalidArgument("sign sequences use only '+' and '-', got '" + std::string(text) + "'");
        }
    }
    return SignSeq(std::move(signs));
}

SignSeq SignSeq::prefix(std::size_t n) const
{
    return SignSeq(std::vector<Sign>(signs_.begin(), signs_.begin() + static_cast<std::ptrdiff_t>(n)));
}

SignSeq SignSeq::extended(Sign s) const
{
    SignSeq out = *this;
    out.signs_.push_back(s);
    return out;
}

std::string SignSeq::str() const
{
    std::string s;
    s.reserve(signs_.size());
    for (Sign x : signs_) {
        s.push_back(x == Sign::plus ? '+' : '-');
    }
    return s;
}

std::strong_ordering operator<=>(const SignSeq &a, const SignSeq &b)
{
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) {
            return a[i] == Sign::plus ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    if (a.size() == b.size()) {
        return std::strong_ordering::equal;
    }
    // The longer sequence continues past the end of the shorter one.
    if (a.size() < b.size()) {
        return b[n] == Sign::plus ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a[n] == Sign::plus ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::strong_ordering cmp(const SignSeq &a, const SignSeq &b)
{
    return a <=> b;
}

bool simpler(const SignSeq &b, const SignSeq &a)
{
    if (b.size() >= a.size()) {
        return false;
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] != a[i]) {
            return false;
        }
    }
    return true;
}

std::vector<SignSeq> left_options(const SignSeq &a)
{
    // The prefix of length k lies below a exactly when a continues with +.
    std::vector<SignSeq> out;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] == Sign::plus) {
            out.push_back(a.prefix(k));
        }
    }
    return out;
}

std::vector<SignSeq> right_options(const SignSeq &a)
{
    std::vector<SignSeq> out;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] == Sign::minus) {
            out.push_back(a.prefix(k));
        }
    }
    return out;
}

namespace
{

// Tracks how a sequence that only ever grows at the end compares with a fixed
// target, in O(1) per appended sign.
class Tracker
{
public:
    explicit Tracker(const SignSeq *target) : t_(target) {}

    bool active() const { return t_ != nullptr; }

    void appended(std::size_t pos, Sign s)
    {
        if (!diverged_ && pos < t_->size() && (*t_)[pos] != s) {
            diverged_ = true;
            fixed_ = s == Sign::plus ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }

    std::strong_ordering relation(const std::vector<Sign> &s) const
    {
        if (diverged_) {
            return fixed_;
        }
        const std::size_t n = s.size();
        if (n < t_->size()) {
            return (*t_)[n] == Sign::plus ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        if (n == t_->size()) {
            return std::strong_ordering::equal;
        }
        return s[t_->size()] == Sign::plus ? std::strong_ordering::greater : std::strong_ordering::less;
    }

private:
    const SignSeq *t_;
    bool diverged_ = false;
    std::strong_ordering fixed_ = std::strong_ordering::equal;
};

// Walks down the binary tree of sign sequences from the root: a node at or
// below lo moves right, a node at or above hi moves left. The first node
// strictly inside (lo, hi) is the unique shortest one, since every other
// sequence in the interval extends it.
SignSeq simplest_in(const SignSeq *lo, const SignSeq *hi)
{
    Tracker tl(lo);
    Tracker th(hi);
    std::vector<Sign> s;
    const std::size_t limit = (lo ? lo->size() : 0) + (hi ? hi->size() : 0) + 1;
    for (;;) {
        const bool above_lo = !tl.active() || tl.relation(s) == std::strong_ordering::greater;
        const bool below_hi = !th.active() || th.relation(s) == std::strong_ordering::less;
        if (above_lo && below_hi) {
            return SignSeq(std::move(s));
        }
        assert(s.size() <= limit);
        (void)limit;
        const Sign next = above_lo ? Sign::minus : Sign::plus;
        const std::size_t pos = s.size();
        s.push_back(next);
        if (tl.active()) {
            tl.appended(pos, next);
        }
        if (th.active()) {
            th.appended(pos, next);
        }
    }
}

const SignSeq *max_of(const SignSeq *a, const SignSeq *b)
{
    if (!a) {
        return b;
    }
    if (!b) {
        return a;
    }
    return *a < *b ? b : a;
}

const SignSeq *min_of(const SignSeq *a, const SignSeq *b)
{
    if (!a) {
        return b;
    }
    if (!b) {
        return a;
    }
    return *b < *a ? b : a;
}

// For every prefix length i of a, the length of the longest proper prefix
// below it (its greatest left option) and above it (its least right option).
struct OptionIndex {
    std::vector<std::optional<std::size_t>> left;
    std::vector<std::optional<std::size_t>> right;

    explicit OptionIndex(const SignSeq &a) : left(a.size() + 1), right(a.size() + 1)
    {
        for (std::size_t i = 0; i < a.size(); ++i) {
            left[i + 1] = a[i] == Sign::plus ? std::optional<std::size_t>(i) : left[i];
            right[i + 1] = a[i] == Sign::minus ? std::optional<std::size_t>(i) : right[i];
        }
    }
};

} // namespace

SignSeq simplest_between(std::span<const SignSeq> left, std::span<const SignSeq> right)
{
    const SignSeq *lo = nullptr;
    const SignSeq *hi = nullptr;
    for (const auto &l : left) {
        lo = max_of(lo, &l);
    }
    for (const auto &r : right) {
        hi = min_of(hi, &r);
    }
    if (lo && hi && !(*lo < *hi)) {
        throw NotSeparated();
    }
    return simplest_in(lo, hi);
}

SignSeq neg(const SignSeq &a)
{
    std::vector<Sign> s;
    s.reserve(a.size());
    for (Sign x : a.signs()) {
        s.push_back(x == Sign::plus ? Sign::minus : Sign::plus);
    }
    return SignSeq(std::move(s));
}

// a + b = { a^L + b, a + b^L | a^R + b, a + b^R }, tabulated over all pairs of
// prefixes. Sums are monotone in each argument, so the greatest left option
// and least right option of each operand determine the cut.
SignSeq add(const SignSeq &a, const SignSeq &b)
{
    const OptionIndex oa(a);
    const OptionIndex ob(b);
    const std::size_t n = a.size() + 1;
    const std::size_t m = b.size() + 1;
    std::vector<SignSeq> table(n * m);
    auto at = [&](std::size_t i, std::size_t j) -> const SignSeq & { return table[i * m + j]; };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const SignSeq *lo = nullptr;
            const SignSeq *hi = nullptr;
            if (oa.left[i]) {
                lo = max_of(lo, &at(*oa.left[i], j));
            }
            if (ob.left[j]) {
                lo = max_of(lo, &at(i, *ob.left[j]));
            }
            if (oa.right[i]) {
                hi = min_of(hi, &at(*oa.right[i], j));
            }
            if (ob.right[j]) {
                hi = min_of(hi, &at(i, *ob.right[j]));
            }
            table[i * m + j] = simplest_in(lo, hi);
        }
    }
    return table.back();
}

SignSeq sub(const SignSeq &a, const SignSeq &b)
{
    return add(a, neg(b));
}

namespace
{

// Products depend only on the operands, so memoized results are shared across
// calls on the same thread.
using MulMemo = std::unordered_map<std::string, SignSeq>;

SignSeq mul_memo(const SignSeq &a, const SignSeq &b, MulMemo &memo);

// x + y - z
SignSeq combine(const SignSeq &x, const SignSeq &y, const SignSeq &z)
{
    return add(add(x, y), neg(z));
}

SignSeq mul_uncached(const SignSeq &a, const SignSeq &b, MulMemo &memo)
{
    // ab = { a^L b + a b^L - a^L b^L, a^R b + a b^R - a^R b^R |
    //        a^L b + a b^R - a^L b^R, a^R b + a b^L - a^R b^L }
    // Each option expression is ab minus or plus (a - a^*)(b - b^*), so the
    // option closest to a and b is the extreme one in each family.
    const auto al = left_options(a);
    const auto ar = right_options(a);
    const auto bl = left_options(b);
    const auto br = right_options(b);
    const SignSeq *aL = al.empty() ? nullptr : &al.back();
    const SignSeq *aR = ar.empty() ? nullptr : &ar.back();
    const SignSeq *bL = bl.empty() ? nullptr : &bl.back();
    const SignSeq *bR = br.empty() ? nullptr : &br.back();

    std::vector<SignSeq> lefts;
    std::vector<SignSeq> rights;
    auto option = [&](const SignSeq *x, const SignSeq *y, std::vector<SignSeq> &into) {
        if (x && y) {
            into.push_back(combine(mul_memo(*x, b, memo), mul_memo(a, *y, memo), mul_memo(*x, *y, memo)));
        }
    };
    option(aL, bL, lefts);
    option(aR, bR, lefts);
    option(aL, bR, rights);
    option(aR, bL, rights);
    return simplest_between(lefts, rights);
}

SignSeq mul_memo(const SignSeq &a, const SignSeq &b, MulMemo &memo)
{
    std::string key = a.str();
    key.push_back('|');
    key += b.str();
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    SignSeq r = mul_uncached(a, b, memo);
    memo.emplace(std::move(key), r);
    return r;
}

} // namespace

SignSeq mul(const SignSeq &a, const SignSeq &b)
{
    thread_local MulMemo memo;
    if (memo.size() > (1u << 20)) {
        memo.clear();
    }
    return mul_memo(a, b, memo);
}

// -------------------------------------------------------------------- Dyadic

Dyadic::Dyadic(mpz_class k, unsigned long m) : k_(std::move(k)), m_(m)
{
    reduce();
}

void Dyadic::reduce()
{
    if (k_ == 0) {
        m_ = 0;
        return;
    }
    const unsigned long tz = mpz_scan1(k_.get_mpz_t(), 0);
    const unsigned long shift = std::min(tz, m_);
    if (shift > 0) {
        mpz_fdiv_q_2exp(k_.get_mpz_t(), k_.get_mpz_t(), shift);
        m_ -= shift;
    }
}

Dyadic Dyadic::from_rat(const Rat &r)
{
    const mpz_class den = r.den();
    const std::size_t bits = mpz_sizeinbase(den.get_mpz_t(), 2);
    if (mpz_popcount(den.get_mpz_t()) != 1) {
        throw InvalidArgument(r.str() + " is not a dyadic rational");
    }
    return Dyadic(r.num(), static_cast<unsigned long>(bits - 1));
}

Rat Dyadic::to_rat() const
{
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, m_);
    return Rat(mpq_class(k_, den));
}

namespace
{

mpz_class scaled(const mpz_class &k, unsigned long by)
{
    mpz_class out;
    mpz_mul_2exp(out.get_mpz_t(), k.get_mpz_t(), by);
    return out;
}

} // namespace

Dyadic operator+(const Dyadic &a, const Dyadic &b)
{
    const unsigned long m = std::max(a.m_, b.m_);
    return Dyadic(mpz_class(scaled(a.k_, m - a.m_) + scaled(b.k_, m - b.m_)), m);
}

Dyadic operator*(const Dyadic &a, const Dyadic &b)
{
    return Dyadic(mpz_class(a.k_ * b.k_), a.m_ + b.m_);
}

std::strong_ordering operator<=>(const Dyadic &a, const Dyadic &b)
{
    const unsigned long m = std::max(a.m_, b.m_);
    const int c = ::cmp(scaled(a.k_, m - a.m_), scaled(b.k_, m - b.m_));
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

// Both directions walk the same tree: each + moves up by 1 until the first -,
// after which every sign halves the distance to the nearest ancestor.
Dyadic to_dyadic(const SignSeq &a)
{
    Dyadic v;
    std::optional<Dyadic> lo;
    std::optional<Dyadic> hi;
    for (Sign s : a.signs()) {
        if (s == Sign::plus) {
            lo = v;
            v = hi ? (v + *hi).half() : v + Dyadic(1);
        } else {
            hi = v;
            v = lo ? (*lo + v).half() : v - Dyadic(1);
        }
    }
    return v;
}

SignSeq from_dyadic(const Dyadic &d)
{
    Dyadic v;
    std::optional<Dyadic> lo;
    std::optional<Dyadic> hi;
    std::vector<Sign> out;
    while (!(v == d)) {
        if (v < d) {
            out.push_back(Sign::plus);
            lo = v;
            v = hi ? (v + *hi).half() : v + Dyadic(1);
        } else {
            out.push_back(Sign::minus);
            hi = v;
            v = lo ? (*lo + v).half() : v - Dyadic(1);
        }
    }
    return SignSeq(std::move(out));
}

} // namespace ts::surreal
