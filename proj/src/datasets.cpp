#include "corespectra/datasets.hpp"

#include <sstream>

#include "corespectra/errors.hpp"

namespace corespectra {

namespace {

// Zachary karate club, the standard 78-edge list, 1-based.
constexpr const char* kKarate =
    "1 2\n1 3\n1 4\n1 5\n1 6\n1 7\n1 8\n1 9\n1 11\n1 12\n1 13\n1 14\n"
    "1 18\n1 20\n1 22\n1 32\n"
    "2 3\n2 4\n2 8\n2 14\n2 18\n2 20\n2 22\n2 31\n"
    "3 4\n3 8\n3 9\n3 10\n3 14\n3 28\n3 29\n3 33\n"
    "4 8\n4 13\n4 14\n"
    "5 7\n5 11\n"
    "6 7\n6 11\n6 17\n"
    "7 17\n"
    "9 31\n9 33\n9 34\n"
    "10 34\n"
    "14 34\n"
    "15 33\n15 34\n"
    "16 33\n16 34\n"
    "19 33\n19 34\n"
    "20 34\n"
    "21 33\n21 34\n"
    "23 33\n23 34\n"
    "24 26\n24 28\n24 30\n24 33\n24 34\n"
    "25 26\n25 28\n25 32\n"
    "26 32\n"
    "27 30\n27 34\n"
    "28 34\n"
    "29 32\n29 34\n"
    "30 33\n30 34\n"
    "31 33\n31 34\n"
    "32 33\n32 34\n"
    "33 34\n";

}  // namespace

const char* karate_edge_text() { return kKarate; }

bool is_bundled_dataset(const std::string& name) { return name == "karate"; }

LoadResult bundled_dataset(const std::string& name) {
    if (name == "karate") {
        std::istringstream in(kKarate);
        return parse_edge_list(in, Indexing::one);
    }
    throw parse_error("unknown bundled dataset '" + name + "'");
}

}  // namespace corespectra
