#include <cstdlib>
#include <iostream>
#include <vector>

#include <equikl/verify.hpp>

/* Runs the numbered verification criteria (all eight when none are given)
 * and prints one PASS/FAIL line per criterion. */
int main(int argc, char** argv) {
  std::vector<int> which;
  if (argc <= 1)
    for (int c = 1; c <= 8; ++c) which.push_back(c);
  else
    for (int a = 1; a < argc; ++a) which.push_back(std::atoi(argv[a]));

  bool all_ok = true;
  for (int c : which) {
    try {
      const auto results = equikl::run_criterion(c);
      const bool ok = equikl::all_passed(results);
      all_ok = all_ok && ok;
      std::cout << "criterion " << c << " (" << equikl::criterion_title(c)
                << "): " << (ok ? "PASS" : "FAIL") << std::endl;
      if (!ok)
        for (const auto& r : results)
          if (!r.ok)
            std::cout << "  failed: " << r.label
                      << (r.detail.empty() ? "" : " -- " + r.detail) << std::endl;
    } catch (const std::exception& e) {
      all_ok = false;
      std::cout << "criterion " << c << ": FAIL (exception: " << e.what() << ")"
                << std::endl;
    }
  }
  return all_ok ? 0 : 1;
}
