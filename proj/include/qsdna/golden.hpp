#pragma once

// Embedded golden data: the Psi(n,k) counting table and the published d_RC
// tables, stored verbatim as CSV files under data/golden/. The checkers
// compare against these files and report disagreements; they never edit them.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qsdna/binary_code.hpp"

namespace qsdna {

#ifndef QSDNA_DATA_DIR
#define QSDNA_DATA_DIR "data"
#endif

inline std::string default_data_dir() {
    if (const char* env = std::getenv("QSDNA_DATA_DIR")) return env;
    return QSDNA_DATA_DIR;
}

inline std::vector<std::vector<std::string>> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        rows.push_back(std::move(fields));
    }
    return rows;
}

// psi.csv rows: n,k,count
inline std::map<std::pair<int, int>, uint64_t> load_psi_golden(const std::string& path) {
    std::map<std::pair<int, int>, uint64_t> out;
    for (const auto& row : read_csv(path)) {
        if (row.size() != 3) throw Error("bad psi golden row in " + path);
        out[{std::stoi(row[0]), std::stoi(row[1])}] = std::stoull(row[2]);
    }
    return out;
}

struct DrcGoldenRow {
    int n = 0;
    int k = 0;
    std::string residue_text;        // '|'-joined 0/1 rows, "-" for the zero code
    BinaryCode residue;
    std::map<int, int> drc;          // printed d_RC^m values
};

// drc.csv rows: n,k,rows,drc with rows "110|011" and drc "2=2;4=0"
inline std::vector<DrcGoldenRow> load_drc_golden(const std::string& path) {
    std::vector<DrcGoldenRow> out;
    for (const auto& row : read_csv(path)) {
        if (row.size() != 4) throw Error("bad drc golden row in " + path);
        DrcGoldenRow g;
        g.n = std::stoi(row[0]);
        g.k = std::stoi(row[1]);
        g.residue_text = row[2];
        if (row[2] == "-") {
            g.residue = BinaryCode::zero(g.n);
        } else {
            std::vector<Row> rows;
            std::istringstream rs(row[2]);
            std::string part;
            while (std::getline(rs, part, '|')) rows.push_back(row_from_string(part));
            g.residue = BinaryCode::from_rows(g.n, rows);
        }
        if (g.residue.dim() != g.k) throw Error("drc golden row dimension mismatch in " + path);
        std::istringstream ds(row[3]);
        std::string entry;
        while (std::getline(ds, entry, ';')) {
            auto eq = entry.find('=');
            if (eq == std::string::npos) throw Error("bad drc entry '" + entry + "' in " + path);
            g.drc[std::stoi(entry.substr(0, eq))] = std::stoi(entry.substr(eq + 1));
        }
        out.push_back(std::move(g));
    }
    return out;
}

struct Discrepancy {
    std::string source;  // "table", "formula_1gen", "formula_2gen", "formula_overlap"
    int n = 0;
    int k = 0;
    std::string residue;
    int m = 0;
    std::string stated;  // printed or formula value
    std::string exact;   // search result, or "undefined" when the subcode is empty
    std::string witness;

    std::string to_csv() const {
        std::ostringstream out;
        out << source << ',' << n << ',' << k << ',' << residue << ',' << m << ',' << stated << ','
            << exact << ',' << witness;
        return out.str();
    }
};

}  // namespace qsdna
