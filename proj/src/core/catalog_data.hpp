#pragma once

#include <cstddef>

namespace sugeom {

struct EmbeddedFile {
  const char* name;
  const char* text;
};

// Generated at build time from catalog/.
extern const EmbeddedFile kCatalogFiles[];
extern const std::size_t kCatalogFileCount;

}  // namespace sugeom
