// Field specification (ℚ or GF(p)) and exact matrix rank over either field.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "relsr/binomial.hpp"

namespace relsr {

// Coefficient field: the rationals or a prime field GF(p).
struct FieldSpec {
    enum class Kind { rationals, prime };
    Kind kind = Kind::rationals;
    i64 p = 0;  // the prime when kind == prime

    static FieldSpec Q() { return {}; }
    static FieldSpec GF(i64 prime);

    // Parses "q", "f2" or "fp:<p>".
    static FieldSpec parse(const std::string& s);

    std::string name() const;
    bool operator==(const FieldSpec&) const = default;
};

// Dense matrix over GF(p), entries in [0, p).
int rank_mod_p(std::vector<std::vector<i64>> m, i64 p);

// Dense matrix over ℚ.
int rank_rational(std::vector<std::vector<mpq_class>> m);

// Rank of an integer matrix over the given field.
int rank_over(const std::vector<std::vector<i64>>& m, const FieldSpec& field);

// Modular inverse for GF(p).
i64 inv_mod_p(i64 a, i64 p);

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace relsr
