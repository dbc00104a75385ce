#pragma once

// Text and JSON formats for the domain types.
//
//   partition    "4,4,3" (empty string for the empty partition)
//   cell         "i,j"
//   tabloid      rows separated by ';', entries by ',':  "2,1;3"
//   hook tableau same grid format with signed integers
//   rational     "p/q" reduced, plain "p" for integers

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "nps/exact.hpp"
#include "nps/nps.hpp"
#include "nps/partition.hpp"
#include "nps/tableaux.hpp"

namespace nps {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<int> parse_int_list(const std::string& text, char sep) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("not an integer: '" + item + "'");
        }
    }
    return out;
}

}  // namespace detail

inline Partition parse_partition(const std::string& text) {
    if (text.empty()) return Partition();
    try {
        return Partition(detail::parse_int_list(text, ','));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad partition: ") + e.what());
    }
}

inline std::string print_partition(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

inline Cell parse_cell(const std::string& text) {
    auto v = detail::parse_int_list(text, ',');
    if (v.size() != 2) throw ParseError("bad cell: expected 'i,j'");
    return {v[0], v[1]};
}

inline std::string print_cell(Cell x) {
    return std::to_string(x.row) + "," + std::to_string(x.col);
}

// Rows of a ragged grid; shape is implied by the row lengths.
inline std::vector<std::vector<int>> parse_grid(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::string row;
    std::istringstream in(text);
    while (std::getline(in, row, ';')) rows.push_back(detail::parse_int_list(row, ','));
    return rows;
}

inline Partition grid_shape(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    try {
        return Partition(parts);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad grid shape: ") + e.what());
    }
}

inline std::vector<int> flatten(const std::vector<std::vector<int>>& rows) {
    std::vector<int> flat;
    for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    return flat;
}

inline Tabloid parse_tabloid(const std::string& text) {
    auto rows = parse_grid(text);
    return Tabloid(grid_shape(rows), flatten(rows));
}

inline HookTableau parse_hook_tableau(const std::string& text) {
    auto rows = parse_grid(text);
    return HookTableau(grid_shape(rows), flatten(rows));
}

template <class Grid>
inline std::string print_grid(const Grid& g) {
    std::string out;
    const Partition& shape = g.shape();
    for (int i = 1; i <= shape.rows(); ++i) {
        if (i > 1) out += ';';
        for (int j = 1; j <= shape.part(i); ++j) {
            if (j > 1) out += ',';
            out += std::to_string(g.at({i, j}));
        }
    }
    return out;
}

// Aligned matrix-orientation rendering for human output.
template <class Grid>
inline std::string print_grid_aligned(const Grid& g) {
    const Partition& shape = g.shape();
    std::size_t width = 1;
    for (Cell x : shape.cells())
        width = std::max(width, std::to_string(g.at(x)).size());
    std::string out;
    for (int i = 1; i <= shape.rows(); ++i) {
        for (int j = 1; j <= shape.part(i); ++j) {
            std::string s = std::to_string(g.at({i, j}));
            out += std::string(width - s.size() + (j > 1 ? 1 : 0), ' ') + s;
        }
        out += '\n';
    }
    return out;
}

// Slide cycle in the usual cycle notation "(k0,k1,...,kr)".
inline std::string print_cycle(const ForwardSlide& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.cycle.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.cycle[i]);
    }
    return out + ")";
}

// --- JSON --------------------------------------------------------------------

template <class Grid>
inline nlohmann::json grid_to_json(const Grid& g) {
    nlohmann::json rows = nlohmann::json::array();
    const Partition& shape = g.shape();
    for (int i = 1; i <= shape.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 1; j <= shape.part(i); ++j) row.push_back(g.at({i, j}));
        rows.push_back(row);
    }
    return rows;
}

inline nlohmann::json trace_to_json(const SortTrace& trace, const nlohmann::json& order) {
    nlohmann::json j;
    j["input"] = grid_to_json(trace.input);
    j["order"] = order;
    j["slides"] = nlohmann::json::array();
    for (const ForwardSlide& s : trace.slides)
        j["slides"].push_back({{"cell", print_cell(s.cell)},
                               {"cycle", s.cycle},
                               {"path", [&] {
                                    nlohmann::json p = nlohmann::json::array();
                                    for (Cell c : s.path) p.push_back(print_cell(c));
                                    return p;
                                }()}});
    j["exchanges"] = nlohmann::json::array();
    for (const Exchange& e : trace.exchanges)
        j["exchanges"].push_back({e.smaller, e.larger, print_cell(e.from), print_cell(e.to)});
    j["output"] = grid_to_json(trace.output);
    return j;
}

}  // namespace nps
