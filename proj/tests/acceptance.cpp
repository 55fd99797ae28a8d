#include <iomanip>
#include <iostream>
#include <thread>

#include "thmc/suite.hpp"

int main() {
  thmc::SuiteOptions opt;
  opt.seed = 1;
  opt.jobs = std::max(1u, std::thread::hardware_concurrency());
  const auto result = thmc::run_suite(opt);
  int n = 0;
  for (const auto& r : result.results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << "  [" << ++n << "] " << r.id << " - " << r.title << " ("
              << std::fixed << std::setprecision(1) << r.seconds << "s): " << r.detail << std::endl;
  }
  std::cout << (result.passed() ? "all criteria passed" : "some criteria failed") << std::endl;
  return result.passed() ? 0 : 1;
}
