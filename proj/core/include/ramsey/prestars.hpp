#pragma once

#include <ramsey/common.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace ramsey {

using BigCount = boost::multiprecision::cpp_int;

/// A Y-prestar is (x, y, a) with x_i, y_i in Y_i and a in {x_i + y_i, x_i - y_i,
/// y_i - x_i} (mod N) for every i. Elements may repeat.
/// Returns P(a), the number of prestars centred at a, for a = 0..N-1.
std::vector<BigCount> prestars_by_centre(const std::vector<std::vector<Vertex>> & y, Vertex modulus);

BigCount count_prestars(const std::vector<std::vector<Vertex>> & y, Vertex modulus);

/// Ordered triples of prestars with centres (a, b, a - b), i.e. the first centre
/// is the sum of the other two: sum over a, b of P(a) P(b) P(a - b).
BigCount count_preconstellations(const std::vector<std::vector<Vertex>> & y, Vertex modulus);

/// count_preconstellations >= 2^{-6t} beta^6 N^{3t+2} with beta = prestars / N^{t+1},
/// decided exactly as count * 2^{6t} * N^{3t+4} >= prestars^6.
bool preconstellation_bound_holds(const BigCount & preconstellations, const BigCount & prestars, int t, Vertex modulus);

} // namespace ramsey
