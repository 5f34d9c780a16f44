#include "trustres/network_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace trustres {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void reject_unknown_fields(const json& obj, std::initializer_list<const char*> allowed,
                           const char* where) {
    for (const auto& [k, v] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed) {
            if (k == a) { ok = true; break; }
        }
        if (!ok) {
            throw ParseError(std::string("unknown field '") + k + "' in " + where);
        }
    }
}

std::string get_string(const json& obj, const char* field, const char* where) {
    if (!obj.contains(field) || !obj[field].is_string()) {
        throw ParseError(std::string(where) + " needs string field '" + field + "'");
    }
    return obj[field].get<std::string>();
}

}  // namespace

std::string network_to_json(const TrustNetwork& net) {
    ordered_json doc;
    doc["users"] = net.users();
    auto& maps = doc["mappings"] = ordered_json::array();
    for (const auto& m : net.mappings()) {
        maps.push_back(ordered_json{{"target", m.target},
                                    {"source", m.source},
                                    {"priority", m.priority}});
    }
    auto& beliefs = doc["beliefs"] = ordered_json::array();
    for (const auto& b : net.beliefs()) {
        beliefs.push_back(ordered_json{{"user", b.user}, {"key", b.key}, {"value", b.value}});
    }
    return doc.dump(2) + "\n";
}

TrustNetwork network_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid network JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("network JSON root must be an object");
    reject_unknown_fields(doc, {"users", "mappings", "beliefs"}, "network");

    std::vector<std::string> users;
    if (doc.contains("users")) {
        if (!doc["users"].is_array()) throw ParseError("'users' must be an array");
        for (const auto& u : doc["users"]) {
            if (!u.is_string()) throw ParseError("user ids must be strings");
            users.push_back(u.get<std::string>());
        }
    }

    std::vector<TrustMapping> mappings;
    if (doc.contains("mappings")) {
        if (!doc["mappings"].is_array()) throw ParseError("'mappings' must be an array");
        for (const auto& m : doc["mappings"]) {
            if (!m.is_object()) throw ParseError("mapping entries must be objects");
            reject_unknown_fields(m, {"target", "source", "priority"}, "mapping");
            if (!m.contains("priority") || !m["priority"].is_number_unsigned()) {
                throw ParseError("mapping needs unsigned field 'priority'");
            }
            mappings.push_back({get_string(m, "target", "mapping"),
                                get_string(m, "source", "mapping"),
                                m["priority"].get<std::uint32_t>()});
        }
    }

    std::vector<Belief> beliefs;
    if (doc.contains("beliefs")) {
        if (!doc["beliefs"].is_array()) throw ParseError("'beliefs' must be an array");
        for (const auto& b : doc["beliefs"]) {
            if (!b.is_object()) throw ParseError("belief entries must be objects");
            reject_unknown_fields(b, {"user", "key", "value"}, "belief");
            beliefs.push_back({get_string(b, "user", "belief"), get_string(b, "key", "belief"),
                               get_string(b, "value", "belief")});
        }
    }

    return TrustNetwork::build(std::move(users), std::move(mappings), std::move(beliefs));
}

void save_network(const TrustNetwork& net, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << network_to_json(net);
    if (!out) throw IoError("write failed for '" + path + "'");
}

TrustNetwork load_network(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return network_from_json(buf.str());
}

}  // namespace trustres
