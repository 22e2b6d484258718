#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hopfcyc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// source/target shapes of two maps do not line up
struct DimensionError : Error {
    using Error::Error;
};
// an operation would create a space larger than the configured cap
struct SizeGuardError : Error {
    using Error::Error;
};
// malformed spec file / unknown preset / bad flag value
struct SpecParseError : Error {
    using Error::Error;
};
// degenerate or inconsistent structure data (dim-0 space, missing antipode, ...)
struct InputError : Error {
    using Error::Error;
};

// Hard cap on the dimension of any space an operation may create.
// Mutable so the CLI can raise/lower it per run.
inline long long& dimension_cap()
{
    static long long cap = 200000;
    return cap;
}

inline void guard_dimension(long long d, const char* what)
{
    if (d > dimension_cap())
        throw SizeGuardError(std::string(what) + ": dimension " + std::to_string(d)
                             + " exceeds cap " + std::to_string(dimension_cap()));
}

/* ---------------------------------------------------------------- ℚ ---- */

using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline std::string to_string(const Rational& x) { return x.str(); }

/* -------------------------------------------------------------- F_p ---- */

// Prime-field element. The modulus is a per-run constant (one command = one
// run); set_modulus must be called before any arithmetic.
class Fp {
public:
    Fp() : v_(0) {}
    Fp(long long n)
    {
        long long p = (long long)modulus();
        long long r = n % p;
        if (r < 0)
            r += p;
        v_ = (std::uint64_t)r;
    }

    static void set_modulus(std::uint64_t p)
    {
        if (p < 2)
            throw InputError("F_p modulus must be a prime >= 2");
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0)
                throw InputError("F_p modulus " + std::to_string(p) + " is not prime");
        modulus_ref() = p;
    }
    static std::uint64_t modulus()
    {
        std::uint64_t p = modulus_ref();
        if (p == 0)
            throw InputError("F_p modulus not set");
        return p;
    }

    std::uint64_t value() const { return v_; }

    friend Fp operator+(Fp a, Fp b) { return from_raw((a.v_ + b.v_) % modulus()); }
    friend Fp operator-(Fp a, Fp b)
    {
        std::uint64_t p = modulus();
        return from_raw((a.v_ + p - b.v_) % p);
    }
    friend Fp operator*(Fp a, Fp b)
    {
        return from_raw((std::uint64_t)((unsigned __int128)a.v_ * b.v_ % modulus()));
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp operator-() const { return from_raw(v_ == 0 ? 0 : modulus() - v_); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    Fp& operator/=(Fp o) { return *this = *this / o; }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    Fp inverse() const
    {
        if (v_ == 0)
            throw Error("division by zero in F_p");
        // extended Euclid
        long long a = (long long)v_, b = (long long)modulus();
        long long x0 = 1, x1 = 0;
        while (b != 0) {
            long long q = a / b;
            long long t = a - q * b;
            a = b;
            b = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        long long p = (long long)modulus();
        x0 %= p;
        if (x0 < 0)
            x0 += p;
        return from_raw((std::uint64_t)x0);
    }

private:
    static Fp from_raw(std::uint64_t v)
    {
        Fp r;
        r.v_ = v;
        return r;
    }
    static std::uint64_t& modulus_ref()
    {
        static std::uint64_t p = 0;
        return p;
    }
    std::uint64_t v_;
};

inline bool is_zero(const Fp& x) { return x.value() == 0; }
inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

/* ------------------------------------------------------------ traits ---- */

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static const char* field_name() { return "Q"; }
    static Rational from_fraction(long long num, long long den)
    {
        if (den == 0)
            throw Error("zero denominator");
        return Rational(num) / Rational(den);
    }
    static Rational parse(const std::string& s)
    {
        try {
            return Rational(s);
        } catch (const std::exception&) {
            throw SpecParseError("cannot parse rational scalar '" + s + "'");
        }
    }
};

template <>
struct scalar_traits<Fp> {
    static std::string field_name() { return "Fp " + std::to_string(Fp::modulus()); }
    static Fp from_fraction(long long num, long long den)
    {
        if (den == 0)
            throw Error("zero denominator");
        return Fp(num) / Fp(den);
    }
    static Fp parse(const std::string& s)
    {
        // accepts residues and fractions "a/b" with b invertible
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos)
                return Fp(std::stoll(s));
            return Fp(std::stoll(s.substr(0, slash))) / Fp(std::stoll(s.substr(slash + 1)));
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            throw SpecParseError("cannot parse F_p scalar '" + s + "'");
        }
    }
};

} // namespace hopfcyc
