#pragma once

// Internal: each translation unit of the law suite contributes its slice
// of the registry here.  Not installed.

#include <vector>

#include "hfs/laws.hpp"

namespace hfs::laws::detail {

void register_element_laws(std::vector<Law>& laws);
void register_family_laws(std::vector<Law>& laws);
void register_soft_laws(std::vector<Law>& laws);
void register_neighborhood_laws(std::vector<Law>& laws);
void register_approximation_laws(std::vector<Law>& laws);

}  // namespace hfs::laws::detail
