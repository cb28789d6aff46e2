#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace semitoric {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// A point of Z^d. The dimension is the length of the vector.
using IntVec = std::vector<Int>;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// Division with sign conventions suited to normal-form reductions.
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);
Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

Int gcd(const Int& a, const Int& b);
/// g = gcd(a,b) together with Bezout coefficients g = p*a + q*b.
struct Xgcd {
  Int g, p, q;
};
Xgcd xgcd(const Int& a, const Int& b);

/// gcd of all entries (0 for the zero vector).
Int content(const IntVec& v);
/// v divided by its content; the zero vector stays zero.
IntVec primitive(const IntVec& v);

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_scale(const Int& c, const IntVec& v);
IntVec vec_neg(const IntVec& v);
Int dot(const IntVec& a, const IntVec& b);
bool is_zero(const IntVec& v);

std::string to_string(const IntVec& v);

}  // namespace semitoric
