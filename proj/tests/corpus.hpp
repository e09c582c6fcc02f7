#pragma once

#include <string>
#include <utility>
#include <vector>

#include "brcov/words.hpp"

namespace testcorpus {

inline std::vector<std::pair<std::string, brcov::Presentation>> presentations() {
  using brcov::Presentation;
  return {
      {"Z", Presentation::free_abelian(1)},
      {"Z^2", Presentation::free_abelian(2)},
      {"Z^3", Presentation::free_abelian(3)},
      {"F2", Presentation::free_group(2)},
      {"F3", Presentation::free_group(3)},
      {"Z/2", brcov::parse_presentation("gens a; rels a^2; meridians m=a")},
      {"Klein bottle", brcov::parse_presentation("gens a,b; rels a b a^-1 b; meridians m1=a, m2=b")},
  };
}

}  // namespace testcorpus
