#include "palinpair/natural.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace palinpair {

namespace {

int decimal_digits(uint32_t v) {
    int n = 1;
    while (v >= 10) {
        v /= 10;
        ++n;
    }
    return n;
}

}  // namespace

Natural::Natural(uint64_t value) {
    while (value != 0) {
        limbs_.push_back(static_cast<uint32_t>(value % kBase));
        value /= kBase;
    }
}

void Natural::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

Natural Natural::from_limbs(std::vector<uint32_t> limbs) {
    Natural n;
    n.limbs_ = std::move(limbs);
    n.trim();
    return n;
}

Natural Natural::from_string(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Natural: empty string");
    for (char ch : text) {
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("Natural: invalid character in decimal string");
    }
    Natural out;
    std::size_t len = text.size();
    out.limbs_.reserve(len / kBaseDigits + 1);
    while (len > 0) {
        std::size_t take = len >= kBaseDigits ? kBaseDigits : len;
        uint32_t limb = 0;
        for (std::size_t i = len - take; i < len; ++i)
            limb = limb * 10 + static_cast<uint32_t>(text[i] - '0');
        out.limbs_.push_back(limb);
        len -= take;
    }
    out.trim();
    return out;
}

Natural Natural::pow10(std::size_t exponent) {
    Natural out;
    out.limbs_.assign(exponent / kBaseDigits, 0);
    uint32_t top = 1;
    for (std::size_t i = 0; i < exponent % kBaseDigits; ++i) top *= 10;
    out.limbs_.push_back(top);
    return out;
}

bool Natural::fits_uint64() const {
    if (limbs_.size() < 3) return true;
    if (limbs_.size() > 3) return false;
    unsigned __int128 v = limbs_[2];
    v = v * kBase + limbs_[1];
    v = v * kBase + limbs_[0];
    return v <= static_cast<unsigned __int128>(UINT64_MAX);
}

uint64_t Natural::to_uint64() const {
    if (!fits_uint64()) throw std::overflow_error("Natural: does not fit uint64");
    uint64_t v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
    return v;
}

std::size_t Natural::digit_count() const {
    if (limbs_.empty()) return 0;
    return (limbs_.size() - 1) * kBaseDigits + decimal_digits(limbs_.back());
}

std::string Natural::to_string() const {
    if (limbs_.empty()) return "0";
    std::string out = std::to_string(limbs_.back());
    out.reserve(limbs_.size() * kBaseDigits);
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string chunk = std::to_string(limbs_[i]);
        out.append(kBaseDigits - chunk.size(), '0');
        out += chunk;
    }
    return out;
}

int Natural::compare(const Natural& rhs) const {
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() < rhs.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] < rhs.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::strong_ordering Natural::operator<=>(const Natural& rhs) const {
    int c = compare(rhs);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Natural& Natural::operator+=(const Natural& rhs) {
    if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    uint32_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t cur = static_cast<uint64_t>(limbs_[i]) + carry;
        if (i < rhs.limbs_.size()) cur += rhs.limbs_[i];
        limbs_[i] = static_cast<uint32_t>(cur % kBase);
        carry = static_cast<uint32_t>(cur / kBase);
        if (carry == 0 && i >= rhs.limbs_.size()) break;
    }
    if (carry != 0) limbs_.push_back(carry);
    return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
    if (compare(rhs) < 0) throw std::domain_error("Natural: subtraction underflow");
    int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        int64_t cur = static_cast<int64_t>(limbs_[i]) - borrow -
                      (i < rhs.limbs_.size() ? static_cast<int64_t>(rhs.limbs_[i]) : 0);
        if (cur < 0) {
            cur += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        limbs_[i] = static_cast<uint32_t>(cur);
        if (borrow == 0 && i >= rhs.limbs_.size()) break;
    }
    assert(borrow == 0);
    trim();
    return *this;
}

Natural& Natural::operator++() {
    uint32_t carry = 1;
    for (std::size_t i = 0; i < limbs_.size() && carry != 0; ++i) {
        uint64_t cur = static_cast<uint64_t>(limbs_[i]) + carry;
        limbs_[i] = static_cast<uint32_t>(cur % kBase);
        carry = static_cast<uint32_t>(cur / kBase);
    }
    if (carry != 0) limbs_.push_back(carry);
    return *this;
}

Natural operator*(const Natural& lhs, const Natural& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Natural();
    std::vector<uint32_t> out(lhs.limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
        uint64_t carry = 0;
        uint64_t li = lhs.limbs_[i];
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            uint64_t cur = out[i + j] + li * rhs.limbs_[j] + carry;
            out[i + j] = static_cast<uint32_t>(cur % Natural::kBase);
            carry = cur / Natural::kBase;
        }
        std::size_t k = i + rhs.limbs_.size();
        while (carry != 0) {
            uint64_t cur = out[k] + carry;
            out[k] = static_cast<uint32_t>(cur % Natural::kBase);
            carry = cur / Natural::kBase;
            ++k;
        }
    }
    return Natural::from_limbs(std::move(out));
}

Natural& Natural::mul_small(uint32_t factor) {
    if (factor == 0) {
        limbs_.clear();
        return *this;
    }
    uint64_t carry = 0;
    for (auto& limb : limbs_) {
        uint64_t cur = static_cast<uint64_t>(limb) * factor + carry;
        limb = static_cast<uint32_t>(cur % kBase);
        carry = cur / kBase;
    }
    while (carry != 0) {
        limbs_.push_back(static_cast<uint32_t>(carry % kBase));
        carry /= kBase;
    }
    return *this;
}

uint32_t Natural::divmod_small(uint32_t divisor) {
    assert(divisor != 0);
    uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        uint64_t cur = rem * kBase + limbs_[i];
        limbs_[i] = static_cast<uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    trim();
    return static_cast<uint32_t>(rem);
}

// Knuth TAOCP vol. 2 algorithm D, carried out in base 10^9.
Natural::DivMod Natural::divmod(const Natural& num, const Natural& den) {
    if (den.is_zero()) throw std::domain_error("Natural: division by zero");
    if (num.compare(den) < 0) return {Natural(), num};
    if (den.limbs_.size() == 1) {
        Natural q = num;
        uint32_t r = q.divmod_small(den.limbs_[0]);
        return {std::move(q), Natural(r)};
    }

    const uint64_t base = kBase;
    const std::size_t n = den.limbs_.size();
    const std::size_t m = num.limbs_.size();
    const uint32_t norm = static_cast<uint32_t>(base / (den.limbs_.back() + 1ull));

    Natural vn_nat = den;
    vn_nat.mul_small(norm);
    assert(vn_nat.limbs_.size() == n);  // norm keeps the limb count
    const std::vector<uint32_t>& vn = vn_nat.limbs_;

    Natural un_nat = num;
    un_nat.mul_small(norm);
    std::vector<uint32_t> un = std::move(un_nat.limbs_);
    un.resize(m + 1, 0);

    std::vector<uint32_t> q(m - n + 1, 0);
    for (std::size_t j = m - n + 1; j-- > 0;) {
        uint64_t numer = static_cast<uint64_t>(un[j + n]) * base + un[j + n - 1];
        uint64_t qhat = numer / vn[n - 1];
        uint64_t rhat = numer % vn[n - 1];
        while (qhat >= base || qhat * vn[n - 2] > rhat * base + un[j + n - 2]) {
            --qhat;
            rhat += vn[n - 1];
            if (rhat >= base) break;
        }

        // Multiply-and-subtract qhat * vn from un[j .. j+n].
        uint64_t carry = 0;
        int64_t borrow = 0;
        for (std::size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * vn[i] + carry;
            carry = p / base;
            int64_t t = static_cast<int64_t>(un[i + j]) -
                        static_cast<int64_t>(p % base) - borrow;
            if (t < 0) {
                t += base;
                borrow = 1;
            } else {
                borrow = 0;
            }
            un[i + j] = static_cast<uint32_t>(t);
        }
        int64_t top = static_cast<int64_t>(un[j + n]) - static_cast<int64_t>(carry) - borrow;
        if (top < 0) {
            // qhat was one too large; add the divisor back once.
            --qhat;
            uint64_t carry2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                uint64_t s = static_cast<uint64_t>(un[i + j]) + vn[i] + carry2;
                un[i + j] = static_cast<uint32_t>(s % base);
                carry2 = s / base;
            }
            top += static_cast<int64_t>(carry2);
            assert(top == 0);
        }
        un[j + n] = static_cast<uint32_t>(top);
        q[j] = static_cast<uint32_t>(qhat);
    }

    un.resize(n);
    Natural rem = from_limbs(std::move(un));
    if (norm != 1) {
        uint32_t leftover = rem.divmod_small(norm);
        assert(leftover == 0);
        (void)leftover;
    }
    return {from_limbs(std::move(q)), std::move(rem)};
}

Natural Natural::gcd(Natural x, Natural y) {
    while (!y.is_zero()) {
        Natural r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

// ---------------------------------------------------------------------------
// SignedInt

SignedInt::SignedInt(int64_t value) {
    if (value < 0) {
        negative_ = true;
        // Avoid overflow on INT64_MIN.
        mag_ = Natural(static_cast<uint64_t>(-(value + 1)) + 1);
    } else {
        mag_ = Natural(static_cast<uint64_t>(value));
    }
}

SignedInt SignedInt::from_string(std::string_view text) {
    bool neg = !text.empty() && text.front() == '-';
    if (neg) text.remove_prefix(1);
    return SignedInt(Natural::from_string(text), neg);
}

bool SignedInt::fits_int64() const {
    if (!mag_.fits_uint64()) return false;
    uint64_t v = mag_.to_uint64();
    if (negative_) return v <= static_cast<uint64_t>(INT64_MAX) + 1;
    return v <= static_cast<uint64_t>(INT64_MAX);
}

int64_t SignedInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("SignedInt: does not fit int64");
    uint64_t v = mag_.to_uint64();
    if (negative_) return static_cast<int64_t>(~v + 1);  // two's complement negate
    return static_cast<int64_t>(v);
}

std::string SignedInt::to_string() const {
    std::string s = mag_.to_string();
    if (negative_) s.insert(s.begin(), '-');
    return s;
}

int SignedInt::compare(const SignedInt& rhs) const {
    if (negative_ != rhs.negative_) return negative_ ? -1 : 1;
    int c = mag_.compare(rhs.mag_);
    return negative_ ? -c : c;
}

std::strong_ordering SignedInt::operator<=>(const SignedInt& rhs) const {
    int c = compare(rhs);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

SignedInt& SignedInt::operator+=(const SignedInt& rhs) {
    if (negative_ == rhs.negative_) {
        mag_ += rhs.mag_;
    } else if (mag_.compare(rhs.mag_) >= 0) {
        mag_ -= rhs.mag_;
    } else {
        mag_ = rhs.mag_ - mag_;
        negative_ = rhs.negative_;
    }
    normalize();
    return *this;
}

SignedInt operator*(const SignedInt& lhs, const SignedInt& rhs) {
    return SignedInt(lhs.magnitude() * rhs.magnitude(),
                     lhs.is_negative() != rhs.is_negative());
}

SignedInt::DivMod SignedInt::divmod(const SignedInt& num, const SignedInt& den) {
    auto [q, r] = Natural::divmod(num.mag_, den.mag_);
    return {SignedInt(std::move(q), num.negative_ != den.negative_),
            SignedInt(std::move(r), num.negative_)};
}

SignedInt SignedInt::floor_div(const SignedInt& num, const SignedInt& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero() && (num.is_negative() != den.is_negative())) q -= SignedInt(1);
    return q;
}

SignedInt SignedInt::ceil_div(const SignedInt& num, const SignedInt& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero() && (num.is_negative() == den.is_negative())) q += SignedInt(1);
    return q;
}

bool SignedInt::divides(const SignedInt& den, const SignedInt& num) {
    return (num.mag_ % den.mag_).is_zero();
}

SignedInt SignedInt::gcd(const SignedInt& x, const SignedInt& y) {
    return SignedInt(Natural::gcd(x.mag_, y.mag_));
}

}  // namespace palinpair
