#include "trustres/network.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace trustres {

namespace {

void check_token(const std::string& t, const char* what) {
    if (t.empty()) {
        throw ValidationError(ValidationKind::InvalidToken,
                              std::string("empty ") + what + " token");
    }
}

void check_user_token(const std::string& t) {
    check_token(t, "user");
    for (char c : t) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            throw ValidationError(ValidationKind::InvalidToken,
                                  "user id contains comma or whitespace: '" + t + "'");
        }
    }
}

}  // namespace

TrustNetwork TrustNetwork::build(std::vector<std::string> users,
                                 std::vector<TrustMapping> mappings,
                                 std::vector<Belief> beliefs) {
    for (const auto& u : users) check_user_token(u);

    std::sort(users.begin(), users.end());
    if (std::adjacent_find(users.begin(), users.end()) != users.end()) {
        users.erase(std::unique(users.begin(), users.end()), users.end());
    }
    std::set<std::string> user_set(users.begin(), users.end());

    auto require_user = [&](const std::string& id, const char* where) {
        if (!user_set.count(id)) {
            throw ValidationError(ValidationKind::UnknownUser,
                                  std::string(where) + " references unknown user '" + id + "'");
        }
    };

    for (const auto& m : mappings) {
        check_user_token(m.target);
        check_user_token(m.source);
        require_user(m.target, "mapping");
        require_user(m.source, "mapping");
        if (m.target == m.source) {
            throw ValidationError(ValidationKind::SelfTrust,
                                  "user '" + m.target + "' cannot trust itself");
        }
    }
    std::sort(mappings.begin(), mappings.end());
    for (std::size_t i = 1; i < mappings.size(); ++i) {
        if (mappings[i - 1].target == mappings[i].target &&
            mappings[i - 1].source == mappings[i].source) {
            throw ValidationError(ValidationKind::DuplicateMapping,
                                  "duplicate mapping " + mappings[i].target + " <- " +
                                      mappings[i].source);
        }
    }

    for (const auto& b : beliefs) {
        check_user_token(b.user);
        check_token(b.key, "key");
        check_token(b.value, "value");
        require_user(b.user, "belief");
    }
    std::sort(beliefs.begin(), beliefs.end());
    for (std::size_t i = 1; i < beliefs.size(); ++i) {
        if (beliefs[i - 1].user == beliefs[i].user && beliefs[i - 1].key == beliefs[i].key) {
            throw ValidationError(ValidationKind::DuplicateBelief,
                                  "two beliefs for (" + beliefs[i].user + ", " + beliefs[i].key +
                                      ")");
        }
    }

    TrustNetwork net;
    net.users_ = std::move(users);
    net.mappings_ = std::move(mappings);
    net.beliefs_ = std::move(beliefs);
    return net;
}

bool TrustNetwork::has_user(const std::string& id) const {
    return std::binary_search(users_.begin(), users_.end(), id);
}

TrustNetwork TrustNetwork::insert_belief(const Belief& b) const {
    if (!has_user(b.user)) {
        throw ValidationError(ValidationKind::UnknownUser,
                              "belief references unknown user '" + b.user + "'");
    }
    auto beliefs = beliefs_;
    std::erase_if(beliefs, [&](const Belief& x) { return x.user == b.user && x.key == b.key; });
    beliefs.push_back(b);
    return build(users_, mappings_, std::move(beliefs));
}

TrustNetwork TrustNetwork::revoke_belief(const std::string& user, const std::string& key) const {
    auto beliefs = beliefs_;
    std::erase_if(beliefs, [&](const Belief& x) { return x.user == user && x.key == key; });
    TrustNetwork net;
    net.users_ = users_;
    net.mappings_ = mappings_;
    net.beliefs_ = std::move(beliefs);
    return net;
}

TrustNetwork TrustNetwork::add_mapping(const TrustMapping& m) const {
    auto mappings = mappings_;
    std::erase_if(mappings, [&](const TrustMapping& x) {
        return x.target == m.target && x.source == m.source;
    });
    mappings.push_back(m);
    return build(users_, std::move(mappings), beliefs_);
}

TrustNetwork TrustNetwork::revoke_mapping(const std::string& target,
                                          const std::string& source) const {
    auto mappings = mappings_;
    std::erase_if(mappings, [&](const TrustMapping& x) {
        return x.target == target && x.source == source;
    });
    TrustNetwork net;
    net.users_ = users_;
    net.mappings_ = std::move(mappings);
    net.beliefs_ = beliefs_;
    return net;
}

std::vector<std::string> TrustNetwork::active_domain(const std::string& key) const {
    std::vector<std::string> vals;
    for (const auto& b : beliefs_) {
        if (b.key == key) vals.push_back(b.value);
    }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

std::vector<std::string> TrustNetwork::keys() const {
    std::vector<std::string> ks;
    for (const auto& b : beliefs_) ks.push_back(b.key);
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    return ks;
}

TrustNetwork TrustNetwork::disjoint_union(const TrustNetwork& a, const TrustNetwork& b) {
    for (const auto& u : b.users_) {
        if (a.has_user(u)) {
            throw ValidationError(ValidationKind::UserOverlap,
                                  "user '" + u + "' appears in both networks");
        }
    }
    std::vector<std::string> users = a.users_;
    users.insert(users.end(), b.users_.begin(), b.users_.end());
    std::vector<TrustMapping> mappings = a.mappings_;
    mappings.insert(mappings.end(), b.mappings_.begin(), b.mappings_.end());
    std::vector<Belief> beliefs = a.beliefs_;
    beliefs.insert(beliefs.end(), b.beliefs_.begin(), b.beliefs_.end());
    return build(std::move(users), std::move(mappings), std::move(beliefs));
}

}  // namespace trustres
