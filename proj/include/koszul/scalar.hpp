#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace koszul {

// Arbitrary-precision rational. Thin wrapper around mpq_class so the rest of
// the library can stay agnostic about the backing field type.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const std::string& s) : v_(s) { v_.canonicalize(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Rational inv() const {
        if (is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(1) / v_);
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

    std::string str() const { return v_.get_str(); }
    static const char* field_name() { return "Q"; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

// Prime field with a session-wide modulus. The modulus is fixed once per
// computation session (set_modulus throws if changed mid-session without
// reset), matching the "one field per session" rule.
class Fp {
public:
    Fp() : v_(0) {}
    Fp(long n) {
        long p = modulus();
        v_ = n % p;
        if (v_ < 0) v_ += p;
    }
    explicit Fp(const std::string& s) : Fp(parse_int(s)) {}

    static void set_modulus(long p) {
        if (p < 2 || !is_prime(p)) throw std::invalid_argument("Fp: modulus must be prime");
        modulus_ref() = p;
    }
    static long modulus() {
        long p = modulus_ref();
        if (p == 0) throw std::logic_error("Fp: modulus not set");
        return p;
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp inv() const {
        if (is_zero()) throw std::domain_error("Fp: division by zero");
        // extended Euclid
        long p = modulus();
        long a = v_, b = p, x0 = 1, x1 = 0;
        while (b != 0) {
            long q = a / b;
            long t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return Fp(x0);
    }

    Fp operator-() const { return Fp(-v_); }
    Fp& operator+=(const Fp& o) { v_ = (v_ + o.v_) % modulus(); return *this; }
    Fp& operator-=(const Fp& o) { v_ = (v_ - o.v_ + modulus()) % modulus(); return *this; }
    Fp& operator*=(const Fp& o) {
        v_ = static_cast<long>((static_cast<__int128>(v_) * o.v_) % modulus());
        return *this;
    }
    Fp& operator/=(const Fp& o) { return *this *= o.inv(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

    std::string str() const { return std::to_string(v_); }
    static std::string field_name() { return "F " + std::to_string(modulus()); }

private:
    static long& modulus_ref() {
        static long m = 0;
        return m;
    }
    static bool is_prime(long p) {
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }
    static long parse_int(const std::string& s) {
        size_t pos = 0;
        long n = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("Fp: bad literal " + s);
        return n;
    }
    long v_;
};

// Parses "a" or "a/b" into a field element.
template <class F>
F parse_scalar(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return F(s);
    F num(s.substr(0, slash));
    F den(s.substr(slash + 1));
    return num / den;
}

template <>
inline Rational parse_scalar<Rational>(const std::string& s) {
    return Rational(s);
}

}  // namespace koszul
