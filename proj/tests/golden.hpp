#pragma once

// Expected values frozen by tests/oracle/freeze.py, plus the composite witness files.

#include "hecke/laurent.hpp"
#include "hecke/zbasis.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#ifndef HECKE_GOLDEN_DIR
#error "HECKE_GOLDEN_DIR must be defined"
#endif

namespace golden {

inline std::string path(const std::string& name) { return std::string(HECKE_GOLDEN_DIR) + "/" + name; }

inline const std::map<std::string, std::string>& oracle_values() {
    static const std::map<std::string, std::string> values = [] {
        std::map<std::string, std::string> out;
        std::ifstream in(path("oracle_values.txt"));
        if (!in) throw std::runtime_error("missing oracle_values.txt");
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            auto eq = line.find(" = ");
            if (eq == std::string::npos) throw std::runtime_error("malformed oracle line: " + line);
            out[line.substr(0, eq)] = line.substr(eq + 3);
        }
        return out;
    }();
    return values;
}

inline const std::string& raw(const std::string& key) {
    auto it = oracle_values().find(key);
    if (it == oracle_values().end()) throw std::runtime_error("no oracle value for " + key);
    return it->second;
}

inline hecke::LaurentQA laurent(const std::string& key) { return hecke::LaurentQA::parse(raw(key)); }

/// "a:c0,c1,...;a:..." as a ZAPoly.
inline hecke::ZAPoly z2(const std::string& key) {
    std::map<int, hecke::ZAPoly::Coeffs> slices;
    std::stringstream rows(raw(key));
    std::string row;
    while (std::getline(rows, row, ';')) {
        auto colon = row.find(':');
        int ae = std::stoi(row.substr(0, colon));
        std::stringstream cs(row.substr(colon + 1));
        std::string c;
        while (std::getline(cs, c, ',')) slices[ae].push_back(hecke::parse_rational(c));
    }
    return hecke::ZAPoly(std::move(slices));
}

}  // namespace golden
