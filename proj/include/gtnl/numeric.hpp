#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gtnl {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

/// Formats a rational as "p" or "p/q" (q > 1).
inline std::string rat_to_string(const Rat& q)
{
    if (den(q) == 1)
        return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rat rat_from_string(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0)
            throw std::invalid_argument("zero denominator");
        return Rat(p, q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

inline std::size_t hash_combine(std::size_t seed, std::size_t v)
{
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

/// Hash over the GMP limb representation; equal values hash equal.
inline std::size_t hash_int(const Int& z)
{
    const mpz_srcptr p = z.backend().data();
    std::size_t h = static_cast<std::size_t>(p->_mp_size);  // sign + limb count
    const int n = std::abs(p->_mp_size);
    for (int i = 0; i < n; ++i)
        h = hash_combine(h, static_cast<std::size_t>(p->_mp_d[i]));
    return h;
}

inline std::size_t hash_rat(const Rat& q)
{
    return hash_combine(hash_int(num(q)), hash_int(den(q)));
}

inline std::size_t hash_rat_vector(const std::vector<Rat>& v)
{
    std::size_t h = v.size();
    for (const auto& q : v)
        h = hash_combine(h, hash_rat(q));
    return h;
}

}  // namespace gtnl
