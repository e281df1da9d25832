#include "altknot/table.hpp"

#include <fstream>
#include <sstream>

namespace altknot {

Diagram TableEntry::diagram() const { return dt.empty() ? Diagram() : from_dt(dt); }

std::optional<bool> TableEntry::unknotting_one() const {
    if (!u) return std::nullopt;
    return *u == "1";
}

std::vector<TableEntry> parse_table(std::istream& in) {
    std::vector<TableEntry> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream is(line);
        std::vector<std::string> cols;
        for (std::string tok; is >> tok;) cols.push_back(tok);
        if (cols.empty()) continue;
        if (cols.size() < 2 || cols.size() > 5)
            throw TableError("line " + std::to_string(lineno) + ": expected name, dt code and up to three columns");
        TableEntry e;
        e.name = cols[0];
        try {
            if (cols[1].find_first_not_of("0123456789-,[]") != std::string::npos)
                throw TableError("bad dt code " + cols[1]);
            if (cols[1] != "-") e.dt = parse_int_list(cols[1]);
            if (cols.size() > 2 && cols[2] != "-") e.det = std::stoll(cols[2]);
            if (cols.size() > 3 && cols[3] != "-") e.signature = std::stoi(cols[3]);
        } catch (const std::exception& ex) {
            throw TableError("line " + std::to_string(lineno) + ": " + ex.what());
        }
        if (cols.size() > 4 && cols[4] != "-") e.u = cols[4];
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<TableEntry> load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw TableError("cannot open " + path);
    return parse_table(in);
}

std::string default_table_path() { return std::string(ALTKNOT_DATA_DIR) + "/knots.txt"; }
std::string default_jones_path() { return std::string(ALTKNOT_DATA_DIR) + "/jones.txt"; }

const TableEntry* find_entry(const std::vector<TableEntry>& table, const std::string& name) {
    for (const auto& e : table)
        if (e.name == name) return &e;
    return nullptr;
}

std::map<std::string, Laurent> load_jones(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw TableError("cannot open " + path);
    std::map<std::string, Laurent> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::string name, term;
        is >> name;
        Laurent p;
        while (is >> term) {
            auto colon = term.find(':');
            if (colon == std::string::npos) throw TableError("bad Jones term " + term);
            p = p + Laurent::monomial(std::stoll(term.substr(colon + 1)), -std::stoi(term.substr(0, colon)));
        }
        out[name] = p;
    }
    return out;
}

}  // namespace altknot
