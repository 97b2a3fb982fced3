#include "altgraph/bigcount.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

namespace altgraph {

const BigCount& big_factorial(unsigned n) {
  static std::mutex mutex;
  // deque: growth never invalidates references handed out earlier
  static std::deque<BigCount> table{1, 1};
  std::lock_guard<std::mutex> lock(mutex);
  while (table.size() <= n) {
    table.push_back(table.back() * static_cast<unsigned>(table.size()));
  }
  return table[n];
}

BigCount exact_div(const BigCount& numerator, const BigCount& denominator,
                   const char* what) {
  if (denominator == 0) throw std::logic_error(std::string(what) + ": division by zero");
  BigCount q, r;
  boost::multiprecision::divide_qr(numerator, denominator, q, r);
  if (r != 0)
    throw std::logic_error(std::string(what) + ": inexact division " +
                           numerator.str() + "/" + denominator.str());
  return q;
}

}  // namespace altgraph
