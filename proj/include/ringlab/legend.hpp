#pragma once

// Human-readable names for element indices, following each constructor's
// enumeration order.

#include <string>
#include <vector>

#include "ringlab/construct.hpp"
#include "ringlab/spec.hpp"

namespace ringlab {

/// label[i] describes element i of build(spec), e.g. "[[1,0],[0,1]]" or "(1, 3)".
std::vector<std::string> element_legend(const RingSpec& spec, const BuildOptions& options = {});

}  // namespace ringlab
