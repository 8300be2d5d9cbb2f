#pragma once

#include <string>

#include "powcol/construct.hpp"

namespace powcol {

/// Construction descriptors, the CLI's JSON input format:
///   {"kind":"trivial","lambda":L,"kappa":K,"i":I,"pi":[...]}
///   {"kind":"parity","k":K,"m":M}            (table form; "tag" for lazy)
///   {"kind":"cylinder","lambda":L,"x":[...],"base":<descriptor>}
///   {"kind":"recolor","perm":[...],"base":<descriptor>}
///   {"kind":"partition","pieces":[{"x0":[...],"coloring":<descriptor>}]}
///   {"kind":"theorem10"}

/// True when the descriptor denotes an infinite-domain coloring that can
/// only be evaluated lazily (theorem10, partition, parity without "m").
bool descriptor_is_lazy(const std::string& text);

ColoringTable table_from_descriptor(const std::string& text);
LazyColoring lazy_from_descriptor(const std::string& text);

}  // namespace powcol
