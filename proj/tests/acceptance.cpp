// One pass/fail line per acceptance criterion; exit status is nonzero if any line fails.
#include <chrono>
#include <cstdio>
#include <string>

#include "finduality/suite.hpp"

using namespace finduality;

namespace {

void print_line(int id, bool pass, const std::string& title, double seconds, const std::string& witness) {
  std::printf("criterion %d: %s (%s) [%.2fs]\n", id, pass ? "PASS" : "FAIL", title.c_str(), seconds);
  if (!pass) std::printf("  witness: %s\n", witness.c_str());
  std::fflush(stdout);
}

std::string first_witness(const CriterionResult& r) {
  for (const auto& l : r.laws)
    if (!l.pass) return l.law + ": " + l.witness;
  return "";
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const SuiteConfig config;
  bool all = true;
  const auto& criteria = suite_criteria();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = clock::now();
    bool pass = false;
    CriterionResult r;
    std::string witness;
    try {
      r = criteria[i](config);
      pass = r.pass();
      witness = first_witness(r);
    } catch (const std::exception& e) {
      witness = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(clock::now() - t0).count();
    print_line(static_cast<int>(i) + 1, pass, r.title, s, witness);
    all = all && pass;
  }

  const auto t0 = clock::now();
  bool same = false;
  std::string witness;
  try {
    const std::string a = to_json(run_suite(config)).dump();
    const std::string b = to_json(run_suite(config)).dump();
    same = a == b;
    if (!same) witness = "reports differ in length " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
  } catch (const std::exception& e) {
    witness = std::string("exception: ") + e.what();
  }
  print_line(10, same, "run_suite twice gives byte-identical reports",
             std::chrono::duration<double>(clock::now() - t0).count(), witness);
  all = all && same;
  return all ? 0 : 1;
}
