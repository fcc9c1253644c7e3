#ifndef SMOOTHROOTS_EXTINT_HPP
#define SMOOTHROOTS_EXTINT_HPP

#include <string>

namespace smoothroots {

// Element of N ∪ {∞}; the usual convention ∞ + k = ∞ applies.
class ExtInt {
public:
    ExtInt() : value_(0), inf_(false) {}
    ExtInt(long v) : value_(v), inf_(false) {} // NOLINT: implicit by design
    static ExtInt infinity() {
        ExtInt e;
        e.inf_ = true;
        return e;
    }

    bool is_infinite() const { return inf_; }
    long value() const { return value_; }

    friend bool operator==(const ExtInt& a, const ExtInt& b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.value_ == b.value_;
    }
    friend bool operator<(const ExtInt& a, const ExtInt& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const ExtInt& a, const ExtInt& b) { return a < b || a == b; }
    friend bool operator>(const ExtInt& a, const ExtInt& b) { return b < a; }
    friend bool operator>=(const ExtInt& a, const ExtInt& b) { return b <= a; }

    friend ExtInt operator+(const ExtInt& a, const ExtInt& b) {
        if (a.inf_ || b.inf_) return infinity();
        return ExtInt(a.value_ + b.value_);
    }
    friend ExtInt operator-(const ExtInt& a, long k) {
        if (a.inf_) return infinity();
        return ExtInt(a.value_ - k);
    }

    static ExtInt max(const ExtInt& a, const ExtInt& b) { return a < b ? b : a; }
    static ExtInt min(const ExtInt& a, const ExtInt& b) { return a < b ? a : b; }

    std::string str() const { return inf_ ? "inf" : std::to_string(value_); }

private:
    long value_;
    bool inf_;
};

} // namespace smoothroots

#endif
