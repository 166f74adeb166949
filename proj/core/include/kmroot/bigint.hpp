#pragma once

#include <gmpxx.h>

#include <string>

namespace kmroot {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline std::string to_string(const BigInt& value) { return value.get_str(); }
inline std::string to_string(const BigRational& value) { return value.get_str(); }

}  // namespace kmroot
