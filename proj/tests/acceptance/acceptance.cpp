// One PASS/FAIL line per acceptance criterion. Exit status is 0 only when
// every criterion passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "ldl/checks.hpp"

using namespace ldl::checks;

namespace {

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> check;
};

Outcome both(const Outcome& a, const Outcome& b) {
  return {a.pass && b.pass, a.detail + " | " + b.detail};
}

std::vector<Instance> ratio_instances() {
  static const std::vector<Instance> all = [] {
    std::vector<Instance> v = small_planar_instances(5000, 5, 8);
    for (auto& s : structured_planar(14)) v.push_back(std::move(s));
    return v;
  }();
  return all;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "planar ratio on small planar graphs", [] { return planar_ratio(ratio_instances()); }},
      {2, "planar feasibility on random planar graphs", [] { return planar_feasibility(200, 200, 2024); }},
      {3, "cut views reproduce outputs",
       [] { return both(cut_view_toy(1000, 20, 7), cut_view_planar(100, 11)); }},
      {4, "cut optimum bounded by restricted optimum",
       [] { return cut_size(small_connected_instances(5, 1000, 8)); }},
      {5, "meta_b contract on non-planar compounds", [] { return meta_b_contract(nonplanar_family(), {6, 7, 8}); }},
      {6, "genus_mds contract", [] { return genus_contract(nonplanar_family(), {1, 2, 4, 6}, 16); }},
      {7, "non-uniformity witnesses on T_alpha", [] { return non_uniformity({1, 2, 3}); }},
      {8, "balanced covers", [] { return balance(20, 60, {1, 2, 3}); }},
      {9, "bounded colorings", [] { return both(path_colorings(6, 60), grid_colorings(4, 20)); }},
      {10, "oracles agree with exhaustive references",
       [] { return both(oracle_equivalence(14, 400, 5), planarity_vs_kuratowski(2000, 8, 3)); }},
      {11, "order invariance", [] { return order_invariance(ratio_instances(), 100, 13); }},
      {12, "additive wrapper", [] { return additive_wrapper(30); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << ' ' << c.name << ": " << o.detail << " (" << ms
              << " ms)" << std::endl;
    failed += o.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << '/' << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
