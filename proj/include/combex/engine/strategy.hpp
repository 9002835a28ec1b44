#pragma once

#include <functional>
#include <string>
#include <vector>

#include "combex/engine/kernel.hpp"

namespace combex {

// One strategy application: parent is decomposed into children under kernel.
template <class C>
struct Decomposition {
  std::string strategy;
  std::vector<C> children;
  CountingKernel kernel;
};

template <class C>
struct Strategy {
  std::string name;
  std::function<std::vector<Decomposition<C>>(const C&)> apply;
};

template <class C>
struct StrategyPack {
  std::vector<Strategy<C>> inferral;
  std::vector<Strategy<C>> initial;
  std::vector<std::vector<Strategy<C>>> expansion;
  std::vector<Strategy<C>> verification;
};

}  // namespace combex
