// Exact scalars: arbitrary-precision rationals (GMP) and prime fields.
// All arithmetic is exact; division by zero throws.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cycl {

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero") {}
};

// Arbitrary-precision rational, canonical form maintained.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw DivisionByZero();
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }

    // Parses "p" or "p/q" with optional sign.
    static Rational parse(const std::string& s);

    bool is_zero() const { return sgn(v_) == 0; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

  private:
    mpq_class v_;
};

inline Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpq_class q(mpz_class(s));
            return Rational(q);
        }
        mpz_class n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (sgn(d) == 0) throw DivisionByZero();
        mpq_class q(n, d);
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw std::runtime_error("bad rational literal: " + s);
    }
}

// Prime field element. The modulus is a session-wide setting: call
// Fp::set_modulus once before any arithmetic.
class Fp {
  public:
    Fp() : v_(0) {}
    Fp(long n) {
        require_modulus();
        long long m = static_cast<long long>(modulus_);
        long long r = n % m;
        if (r < 0) r += m;
        v_ = static_cast<std::uint64_t>(r);
    }

    static void set_modulus(std::uint64_t p) {
        if (p < 2) throw std::runtime_error("modulus must be a prime >= 2");
        modulus_ = p;
    }
    static std::uint64_t modulus() { return modulus_; }

    static Fp zero() { return Fp(); }
    static Fp one() { return Fp(1); }

    static Fp parse(const std::string& s) {
        Rational q = Rational::parse(s);
        return from_rational(q);
    }

    static Fp from_rational(const Rational& q) {
        require_modulus();
        mpz_class p(static_cast<unsigned long>(modulus_));
        mpz_class n = q.num() % p, d = q.den() % p;
        if (n < 0) n += p;
        if (d == 0) throw DivisionByZero();
        mpz_class dinv;
        if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()) == 0)
            throw DivisionByZero();
        mpz_class r = (n * dinv) % p;
        return make(r.get_ui());
    }

    bool is_zero() const { return v_ == 0; }

    Fp operator-() const { return make(v_ == 0 ? 0 : modulus_ - v_); }
    Fp& operator+=(const Fp& o) {
        v_ += o.v_;
        if (v_ >= modulus_) v_ -= modulus_;
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + modulus_ - o.v_;
        return *this;
    }
    Fp& operator*=(const Fp& o) {
        v_ = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(v_) * o.v_) % modulus_);
        return *this;
    }
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

    Fp inverse() const {
        if (v_ == 0) throw DivisionByZero();
        // extended Euclid
        long long t = 0, nt = 1;
        long long r = static_cast<long long>(modulus_), nr = static_cast<long long>(v_);
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += static_cast<long long>(modulus_);
        return make(static_cast<std::uint64_t>(t));
    }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

    std::uint64_t value() const { return v_; }
    std::string str() const { return std::to_string(v_); }

  private:
    static Fp make(std::uint64_t v) {
        Fp x;
        x.v_ = v;
        return x;
    }
    static void require_modulus() {
        if (modulus_ == 0) throw std::runtime_error("Fp modulus not set");
    }
    static inline std::uint64_t modulus_ = 0;
    std::uint64_t v_;
};

// Integer scalar from a sign exponent.
template <class F>
F sign_of(int exponent) {
    return (exponent % 2 == 0) ? F::one() : -F::one();
}

// Converts a rational literal into the working field.
template <class F>
F scalar_from_rational(const Rational& q);

template <>
inline Rational scalar_from_rational<Rational>(const Rational& q) { return q; }

template <>
inline Fp scalar_from_rational<Fp>(const Rational& q) { return Fp::from_rational(q); }

}  // namespace cycl
