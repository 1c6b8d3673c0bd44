#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <sstream>
#include <stdexcept>
#include <string>

namespace halg {

// Exact rational scalar. GMP keeps values in lowest terms with a positive
// denominator, so equality is plain value equality.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

// Prime field scalar with the modulus carried at runtime. A default
// constructed value (or one made from an integer literal) has p == 0 and acts
// as a wildcard: it binds to the modulus of the first bound operand it meets.
// Combining two values bound to different moduli is an error.
struct Fp {
    std::uint64_t v = 0;
    std::uint32_t p = 0;

    Fp() = default;
    Fp(int x) { init_literal(x); }
    Fp(long x) { init_literal(x); }
    Fp(long long x) { init_literal(x); }
    Fp(std::uint64_t x, std::uint32_t q) : v(x % q), p(q) {}

    static Fp unit(std::uint32_t q) { return Fp(1, q); }

    bool bound() const { return p != 0; }

    static std::uint32_t join(std::uint32_t a, std::uint32_t b) {
        if (a == b) return a;
        if (a == 0) return b;
        if (b == 0) return a;
        throw std::invalid_argument("Fp: modulus mismatch (" + std::to_string(a) +
                                    " vs " + std::to_string(b) + ")");
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint32_t q = join(a.p, b.p);
        if (q == 0) return raw(a.v + b.v, 0);
        return Fp(a.v % q + b.v % q, q);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::uint32_t q = join(a.p, b.p);
        if (q == 0) {
            if (b.v > a.v) throw std::invalid_argument("Fp: unbound subtraction underflow");
            return raw(a.v - b.v, 0);
        }
        std::uint64_t av = a.v % q, bv = b.v % q;
        return Fp(av + q - bv, q);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::uint32_t q = join(a.p, b.p);
        if (q == 0) return raw(a.v * b.v, 0);
        return Fp((a.v % q) * (b.v % q) % q, q);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    Fp operator-() const {
        if (p == 0) {
            if (v == 0) return *this;
            throw std::invalid_argument("Fp: cannot negate unbound nonzero value");
        }
        return Fp(std::uint64_t(p) - v % p, p);
    }

    Fp inverse() const {
        if (p == 0) {
            if (v == 1) return *this;
            throw std::invalid_argument("Fp: cannot invert unbound value");
        }
        std::uint64_t a = v % p;
        if (a == 0) throw std::invalid_argument("Fp: division by zero");
        std::int64_t t = 0, nt = 1, r = p, nr = std::int64_t(a);
        while (nr != 0) {
            std::int64_t quot = r / nr;
            std::int64_t tmp = t - quot * nt; t = nt; nt = tmp;
            tmp = r - quot * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += p;
        return Fp(std::uint64_t(t), p);
    }

    Fp& operator+=(const Fp& b) { return *this = *this + b; }
    Fp& operator-=(const Fp& b) { return *this = *this - b; }
    Fp& operator*=(const Fp& b) { return *this = *this * b; }
    Fp& operator/=(const Fp& b) { return *this = *this / b; }

    friend bool operator==(const Fp& a, const Fp& b) {
        std::uint32_t q = join(a.p, b.p);
        if (q == 0) return a.v == b.v;
        return a.v % q == b.v % q;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v; }

  private:
    void init_literal(long long x) {
        if (x < 0) throw std::invalid_argument("Fp: negative literal needs a modulus");
        v = std::uint64_t(x);
        p = 0;
    }
    static Fp raw(std::uint64_t x, std::uint32_t q) {
        Fp r;
        r.v = x;
        r.p = q;
        return r;
    }
};

template <class K>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
    static std::uint64_t characteristic(const Rat&) { return 0; }
    static std::string field_name(const Rat&) { return "rational"; }
    static std::string to_string(const Rat& x) {
        std::ostringstream os;
        os << x;
        return os.str();
    }
};

template <>
struct scalar_traits<Fp> {
    static std::uint64_t characteristic(const Fp& one) { return one.p; }
    static std::string field_name(const Fp& one) { return "fp:" + std::to_string(one.p); }
    static std::string to_string(const Fp& x) { return std::to_string(x.v); }
};

template <class K>
std::uint64_t characteristic(const K& one) {
    return scalar_traits<K>::characteristic(one);
}

}  // namespace halg

namespace Eigen {

template <>
struct NumTraits<halg::Fp> {
    using Self = halg::Fp;
    using Real = Self;
    using NonInteger = Self;
    using Nested = Self;
    using Literal = Self;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4
    };
    static int digits10() { return 19; }
};

}  // namespace Eigen
