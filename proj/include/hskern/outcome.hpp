#pragma once

#include <variant>
#include <vector>

namespace hskern {

// Terminal decision. For YES the witness is already lifted back to the
// original instance; for NO it is empty.
struct Decided {
  bool yes = false;
  std::vector<int> witness;
};

// Equivalent reduced instance plus the trace that lifts kernel witnesses
// back to the original input. The adjusted parameter lives in the instance.
template <class Inst, class Step>
struct Kernel {
  Inst kernel;
  std::vector<Step> trace;
};

template <class Inst, class Step>
using Outcome = std::variant<Decided, Kernel<Inst, Step>>;

}  // namespace hskern
