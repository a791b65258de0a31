#include <iostream>

#include "lefib/fixtures.hpp"

int main(int argc, char** argv) {
  std::string path = argc > 1 ? argv[1] : "data/paper.scen";
  auto ss = lefib::build_all_scenarios();
  lefib::save_scenarios(ss, path);
  std::cout << "wrote " << ss.size() << " scenarios to " << path << "\n";
  return 0;
}
