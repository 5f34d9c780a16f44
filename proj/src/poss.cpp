#include "trustres/poss.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "trustres/detail/csv.hpp"

namespace trustres {

void PossTable::canonicalize() {
    std::sort(rows.begin(), rows.end(), [](const PossRow& a, const PossRow& b) {
        return std::tie(a.key, a.user, a.value) < std::tie(b.key, b.user, b.value);
    });
}

void PossTable::validate_as_beliefs() const {
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& r : rows) {
        if (r.user.empty() || r.key.empty() || r.value.empty()) {
            throw ValidationError(ValidationKind::InvalidToken, "empty field in POSS row");
        }
        if (!seen.insert({r.user, r.key}).second) {
            throw ValidationError(ValidationKind::DuplicateBelief,
                                  "two beliefs for (" + r.user + ", " + r.key + ")");
        }
    }
}

std::string poss_to_csv(const PossTable& table) {
    std::string out = "X,K,V\n";
    for (const auto& r : table.rows) {
        out += detail::csv_line({r.user, r.key, r.value});
    }
    return out;
}

PossTable poss_from_csv(const std::string& text) {
    auto records = detail::csv_parse(text);
    if (records.empty() || records[0] != std::vector<std::string>{"X", "K", "V"}) {
        throw ParseError("POSS file must start with header 'X,K,V'");
    }
    PossTable table;
    for (std::size_t i = 1; i < records.size(); ++i) {
        const auto& rec = records[i];
        if (rec.size() != 3) {
            throw ParseError("POSS row " + std::to_string(i) + " has " +
                             std::to_string(rec.size()) + " fields, expected 3");
        }
        if (rec[0].empty() || rec[1].empty() || rec[2].empty()) {
            throw ParseError("POSS row " + std::to_string(i) + " has an empty field");
        }
        table.rows.push_back({rec[0], rec[1], rec[2]});
    }
    return table;
}

void write_poss(const PossTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << poss_to_csv(table);
    if (!out) throw IoError("write failed for '" + path + "'");
}

PossTable load_poss(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return poss_from_csv(buf.str());
}

}  // namespace trustres
