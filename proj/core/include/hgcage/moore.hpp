#pragma once

#include <cstddef>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hgcage {

using BigInt = boost::multiprecision::cpp_int;

/// Parameters of a d-regular, r-uniform hypergraph of girth g.
struct MooreQuery {
  unsigned d = 0;
  unsigned r = 0;
  unsigned g = 0;
};

/// Counting lower bound on the order of a d-regular, r-uniform hypergraph of
/// girth g, with k = floor(g/2) and x = (d-1)(r-1):
///   odd g:  1 + d(r-1)(x^k - 1)/(x - 1)
///   even g: r(x^k - 1)/(x - 1)
/// The quotient is evaluated as the geometric sum 1 + x + ... + x^(k-1), so
/// d = r = 2 gives the cycle bound g. Throws std::domain_error when d < 2,
/// r < 2 or g < 3.
BigInt naive_moore(const MooreQuery& q);

/// Improved bound for r > d, from applying the naive bound to the dual
/// hypergraph, which has |V|·d/r vertices and the same girth. Equals
/// naive_moore when r <= d; otherwise
///   odd g:  ceil((r/d)(1 + r(d-1)(x^k - 1)/(x - 1)))
///   even g: ceil((r^2/d)(x^k - 1)/(x - 1))
///
/// The even-girth expression is not a valid lower bound: the dual of K3,3 is
/// 2-regular, 3-uniform of girth 4 on 9 vertices, below moore_bound({2,3,4})
/// = 14. Use dual_argument_bound where a sound bound is needed.
BigInt moore_bound(const MooreQuery& q);

/// What the dual argument actually proves: moore_bound for odd g, and for
/// even g the dual's naive bound d(x^k - 1)/(x - 1) scaled by r/d, which is
/// naive_moore again.
BigInt dual_argument_bound(const MooreQuery& q);

enum class TableFormat { kText, kCsv };

/// Both bound blocks for d in [d_min, d_max], r in [r_min, r_max].
void write_moore_table(std::ostream& out, unsigned d_min, unsigned d_max, unsigned r_min, unsigned r_max,
                       unsigned g, TableFormat format);

}  // namespace hgcage
