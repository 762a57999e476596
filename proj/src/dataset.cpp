#include "flexsky/dataset.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace flexsky {

void Schema::validate() const {
    if (attribute_names.empty()) throw ConfigError("schema needs at least one attribute");
    if (attribute_names.size() != directions.size())
        throw ConfigError("schema has " + std::to_string(attribute_names.size()) +
                          " names but " + std::to_string(directions.size()) + " directions");
    std::unordered_set<std::string> seen;
    for (const std::string& name : attribute_names)
        if (!seen.insert(name).second)
            throw ConfigError("duplicate attribute name '" + name + "'");
}

void Relation::validate() const {
    schema.validate();
    std::unordered_set<std::string> ids;
    for (const Tuple& t : tuples) {
        if (t.values.size() != schema.arity())
            throw DataError("tuple '" + t.id + "' has arity " +
                            std::to_string(t.values.size()) + ", expected " +
                            std::to_string(schema.arity()));
        if (!ids.insert(t.id).second) throw DataError("duplicate tuple id '" + t.id + "'");
    }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_cell(const std::string& raw, std::size_t row, std::size_t col) {
    const std::string cell = trimmed(raw);
    const char* begin = cell.c_str();
    char* end = nullptr;
    double value = std::strtod(begin, &end);
    if (cell.empty() || end != begin + cell.size())
        throw DataError("non-numeric cell '" + cell + "' at row " + std::to_string(row) +
                        ", column " + std::to_string(col));
    return value;
}

}  // namespace

Relation load_csv(const std::string& path, const Schema& schema) {
    schema.validate();
    std::ifstream in(path);
    if (!in) throw DataError("cannot open dataset file '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) throw DataError("dataset file '" + path + "' is empty");
    std::vector<std::string> header = split_csv_line(line);
    for (std::string& h : header) h = trimmed(h);

    const std::size_t d = schema.arity();
    bool has_id_column = false;
    if (header.size() == d + 1 && header[0] == "id") {
        has_id_column = true;
    } else if (header.size() != d) {
        throw DataError("header of '" + path + "' has " + std::to_string(header.size()) +
                        " columns, expected " + std::to_string(d));
    }
    const std::size_t offset = has_id_column ? 1 : 0;
    for (std::size_t i = 0; i < d; ++i) {
        if (header[i + offset] != schema.attribute_names[i])
            throw DataError("header column '" + header[i + offset] + "' does not match schema attribute '" +
                            schema.attribute_names[i] + "'");
    }

    Relation rel;
    rel.schema = schema;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (trimmed(line).empty()) continue;
        std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != d + offset)
            throw DataError("row " + std::to_string(row) + " has " +
                            std::to_string(cells.size()) + " cells, expected " +
                            std::to_string(d + offset));
        Tuple t;
        t.id = has_id_column ? trimmed(cells[0]) : "t" + std::to_string(rel.tuples.size() + 1);
        t.values.reserve(d);
        for (std::size_t i = 0; i < d; ++i)
            t.values.push_back(parse_cell(cells[i + offset], row, i + offset + 1));
        rel.tuples.push_back(std::move(t));
    }
    rel.validate();
    return rel;
}

Relation normalize(const Relation& rel) {
    rel.validate();
    if (rel.size() == 0) throw DataError("cannot normalize an empty relation");

    const std::size_t d = rel.arity();
    std::vector<double> lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
        lo[i] = hi[i] = rel.tuples[0].values[i];
        for (const Tuple& t : rel.tuples) {
            lo[i] = std::min(lo[i], t.values[i]);
            hi[i] = std::max(hi[i], t.values[i]);
        }
    }

    Relation out;
    out.schema.attribute_names = rel.schema.attribute_names;
    out.schema.directions.assign(d, Direction::MIN);
    out.tuples.reserve(rel.size());
    for (const Tuple& t : rel.tuples) {
        Tuple nt;
        nt.id = t.id;
        nt.values.resize(d);
        for (std::size_t i = 0; i < d; ++i) {
            const double range = hi[i] - lo[i];
            if (range <= 0.0) {
                nt.values[i] = 0.0;  // everyone ties, everyone best
                continue;
            }
            double scaled = (t.values[i] - lo[i]) / range;
            if (rel.schema.directions[i] == Direction::MAX) scaled = 1.0 - scaled;
            nt.values[i] = scaled;
        }
        out.tuples.push_back(std::move(nt));
    }
    return out;
}

}  // namespace flexsky
