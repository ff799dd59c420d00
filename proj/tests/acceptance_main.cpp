// Dedicated acceptance binary: one pass/fail line per criterion, exit code 0
// only when every criterion holds at its stated tolerance.

#include "adsmax/acceptance.hpp"

#include <iostream>

int main() {
  const auto results = adsmax::acceptance::run(adsmax::acceptance::Suite::full);
  return adsmax::acceptance::report(results, std::cout, &std::cerr);
}
