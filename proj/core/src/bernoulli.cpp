#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "gurland/errors.hpp"
#include "gurland/special_functions.hpp"

namespace gurland {
namespace {

constexpr int kMaxBernoulliCount = 30;

// B_0 .. B_{2 max} by the recurrence  Σ_{k=0}^{m} C(m+1, k) B_k = 0, in exact rationals.
std::vector<double> even_bernoulli_table() {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;

  const int top = 2 * kMaxBernoulliCount;
  std::vector<cpp_rational> b(static_cast<std::size_t>(top) + 1);
  b[0] = 1;
  for (int m = 1; m <= top; ++m) {
    cpp_rational acc = 0;
    cpp_int binom = 1;  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      acc += cpp_rational(binom) * b[static_cast<std::size_t>(k)];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[static_cast<std::size_t>(m)] = -acc / (m + 1);
  }

  std::vector<double> even;
  even.reserve(kMaxBernoulliCount);
  for (int k = 1; k <= kMaxBernoulliCount; ++k) {
    even.push_back(b[static_cast<std::size_t>(2 * k)].convert_to<double>());
  }
  return even;
}

}  // namespace

std::vector<double> bernoulli_numbers(int count) {
  if (count < 1 || count > kMaxBernoulliCount) {
    throw RangeError("bernoulli_numbers: count must be in [1, " +
                     std::to_string(kMaxBernoulliCount) + "], got " + std::to_string(count));
  }
  static const std::vector<double> table = even_bernoulli_table();
  return {table.begin(), table.begin() + count};
}

}  // namespace gurland
