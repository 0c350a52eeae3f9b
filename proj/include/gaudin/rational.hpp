#ifndef GAUDIN_RATIONAL_HPP
#define GAUDIN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <string>
#include <vector>

namespace gaudin {

// Exact rational scalar used for all structure constants and module
// actions. Floating point enters only in Bethe solving and monodromy.
using Rat = boost::multiprecision::cpp_rational;
using Cplx = std::complex<double>;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline Cplx to_cplx(const Rat& r) { return Cplx(to_double(r), 0.0); }

inline std::string rat_str(const Rat& r) { return r.str(); }

// Rational vector helpers (weight coordinates and the like).
using RatVec = std::vector<Rat>;

inline RatVec rat_vec(std::initializer_list<long long> xs) {
  RatVec v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

}  // namespace gaudin

#endif
