#pragma once

#include <string>

#include "slicedev/chain.hpp"
#include "slicedev/develop.hpp"

namespace slicedev {

// 512x512 auto-fit figure: the development solid, the section polygon's
// opened chain dashed, and the forbidden shoulder disk.
std::string render_development_svg(const Development& dev, const Chain& section_chain,
                                   const ForbiddenDisk& disk);

}  // namespace slicedev
