#ifndef CORESPECTRA_DATASETS_HPP
#define CORESPECTRA_DATASETS_HPP

#include <string>

#include "corespectra/graph.hpp"

namespace corespectra {

// True if `name` refers to a graph shipped inside the binary.
bool is_bundled_dataset(const std::string& name);

// Returns a bundled graph by name. Currently only "karate", the Zachary
// karate club network (34 vertices, 78 edges). Unknown names throw
// parse_error.
LoadResult bundled_dataset(const std::string& name);

// Raw edge-list text of the bundled karate graph (1-based labels).
const char* karate_edge_text();

}  // namespace corespectra

#endif
