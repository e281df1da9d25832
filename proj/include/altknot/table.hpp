#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "altknot/oracle.hpp"

namespace altknot {

struct TableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// one line: name dt_code [det] [signature] [u]; dt "-" is the unknot, u may be a range like "2-3"
struct TableEntry {
    std::string name;
    std::vector<int> dt;
    std::optional<Integer> det;
    std::optional<int> signature;
    std::optional<std::string> u;

    Diagram diagram() const;
    // reference u = 1, when the column is present
    std::optional<bool> unknotting_one() const;
    int crossings() const { return static_cast<int>(dt.size()); }
};

std::vector<TableEntry> parse_table(std::istream& in);
std::vector<TableEntry> load_table(const std::string& path);
std::string default_table_path();
const TableEntry* find_entry(const std::vector<TableEntry>& table, const std::string& name);

// reference Jones polynomials, stored in t and returned in q = 1/t
std::map<std::string, Laurent> load_jones(const std::string& path);
std::string default_jones_path();

}  // namespace altknot
