#ifndef RECTADD_RATIONAL_HPP
#define RECTADD_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace rectadd {

using Rat = mpq_class;

Rat make_rat(long num, long den = 1);

// Parses "p", "-p/q" or a decimal like "0.25"; throws validation_error.
Rat parse_rat(const std::string& s);

// "p" or "p/q", always canonical.
std::string rat_str(const Rat& x);

double rat_double(const Rat& x);

// Rising factorial (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1.
Rat pochhammer(const Rat& x, int n);

Rat factorial(int n);
Rat binomial(int n, int k);

Rat rat_pow(const Rat& x, int e); // e >= 0

Rat rat_abs(const Rat& x);

std::vector<Rat> parse_rat_list(const std::string& csv);

} // namespace rectadd

#endif
