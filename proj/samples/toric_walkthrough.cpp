// Walks through the toric class of [4 1 6 2 5 7 3]: the extended form, its
// value shifts, the class members and their block transposition distances.

#include <iostream>

#include "permlab/permlab.hpp"

using namespace permlab;

int main() {
  const auto pi = Permutation::parse("4 1 6 2 5 7 3");
  const int n = pi.size();
  std::cout << "pi        = [" << pi.to_string() << "]\n";
  std::cout << "[0 pi]    = [" << embed(pi).to_string() << "]\n\n";

  std::cout << "value shifts alpha^s o [0 pi]:\n";
  for (int s = 0; s <= n; ++s) std::cout << "  s=" << s << "  [" << (alpha(n, s) * embed(pi)).to_string() << "]\n";

  auto t = build_distance_table(n, GeneratorKind::block_transpositions);
  std::cout << "\ntoric maps f_r(pi) and their distances:\n";
  for (int r = 0; r <= n; ++r) {
    auto f = toric_map(pi, r);
    std::cout << "  r=" << r << "  [" << f.to_string() << "]  d=" << t.at(f) << "\n";
  }

  auto cls = toric_class(pi);
  std::cout << "\nclass size " << cls.size() << ", canonical [" << canonical_toric_representative(pi).to_string()
            << "]\n";
  std::cout << "cycle graph lower bound " << bpl_lower_bound(pi) << ", exact distance " << t.at(pi) << "\n";

  std::cout << "\na shortest sorting sequence:\n";
  for (const auto& m : sorting_sequence(pi, t)) std::cout << "  " << m.to_string() << "\n";
}
