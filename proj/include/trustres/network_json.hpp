#pragma once

#include <string>

#include "trustres/network.hpp"

namespace trustres {

// Network interchange format (UTF-8 JSON):
//   {"users": ["u1", ...],
//    "mappings": [{"target": "u2", "source": "u1", "priority": 1}, ...],
//    "beliefs": [{"user": "u1", "key": "k1", "value": "a"}, ...]}
// Unknown fields are rejected. Serialization is canonical: sorted entries,
// fixed field order, so identical networks produce byte-identical files.

std::string network_to_json(const TrustNetwork& net);
TrustNetwork network_from_json(const std::string& text);

void save_network(const TrustNetwork& net, const std::string& path);
TrustNetwork load_network(const std::string& path);

}  // namespace trustres
