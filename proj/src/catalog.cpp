#include "airtype/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace airtype {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        fields.push_back(trim(field));
    }
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

}  // namespace

Catalog::Catalog(std::vector<AircraftSpec> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw ConfigurationError("catalog: must contain at least one aircraft");
    }
    for (const AircraftSpec& spec : entries_) {
        if (spec.shortcut.empty()) {
            throw ConfigurationError("catalog: empty shortcut for '" + spec.full_name + "'");
        }
        if (!std::isfinite(spec.actual_length_m) || spec.actual_length_m <= 0.0) {
            throw ConfigurationError("catalog: '" + spec.shortcut + "' needs a positive length_m");
        }
    }
    std::sort(entries_.begin(), entries_.end(), [](const AircraftSpec& a, const AircraftSpec& b) {
        if (a.actual_length_m != b.actual_length_m) return a.actual_length_m < b.actual_length_m;
        return a.shortcut < b.shortcut;
    });
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        const auto dup = std::find_if(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(i),
                                      [&](const AircraftSpec& s) { return s.shortcut == entries_[i].shortcut; });
        if (dup != entries_.begin() + static_cast<std::ptrdiff_t>(i)) {
            throw ConfigurationError("catalog: duplicate shortcut '" + entries_[i].shortcut + "'");
        }
    }
}

const Catalog& Catalog::builtin() {
    static const Catalog catalog(std::vector<AircraftSpec>{
        {"LockheedMartin-LM100J", "LM100J", 35.0},
        {"GULFSTREAM-G-280", "G-280", 20.0},
        {"GULFSTREAM-G-550", "G-550", 29.0},
        {"GULFSTREAM-G-650", "G-650", 30.0},
        {"Cessna-Citation CJ4", "CJ4", 16.0},
        {"Cessna-Citation M2", "CM2", 13.0},
        {"Boeing 787-8", "Bo787", 57.0},
        {"Airbus A-380", "A-380", 73.0},
        {"Airbus A-320", "A-320", 38.0},
    });
    return catalog;
}

Catalog Catalog::from_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ConfigurationError("catalog csv: empty file");
    }
    const auto header = split_csv_line(line);
    if (header != std::vector<std::string>{"name", "shortcut", "length_m"}) {
        throw ConfigurationError("catalog csv: header must be 'name,shortcut,length_m'");
    }
    std::vector<AircraftSpec> entries;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 3) {
            throw ConfigurationError("catalog csv: line " + std::to_string(line_no) +
                                     " must have 3 fields, got " + std::to_string(fields.size()));
        }
        double length = 0.0;
        try {
            std::size_t pos = 0;
            length = std::stod(fields[2], &pos);
            if (pos != fields[2].size()) throw std::invalid_argument(fields[2]);
        } catch (const std::exception&) {
            throw ConfigurationError("catalog csv: line " + std::to_string(line_no) +
                                     ": length_m '" + fields[2] + "' is not a number");
        }
        entries.push_back({fields[0], fields[1], length});
    }
    return Catalog(std::move(entries));
}

Catalog Catalog::from_csv_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw FileNotFoundError("catalog csv: cannot open '" + path.string() + "'");
    }
    return from_csv(in);
}

std::string Catalog::to_csv() const {
    std::ostringstream out;
    out << "name,shortcut,length_m\n";
    for (const AircraftSpec& spec : entries_) {
        out << spec.full_name << ',' << spec.shortcut << ',' << spec.actual_length_m << '\n';
    }
    return out.str();
}

const AircraftSpec* Catalog::find(std::string_view shortcut) const {
    const auto it = std::find_if(entries_.begin(), entries_.end(),
                                 [&](const AircraftSpec& s) { return s.shortcut == shortcut; });
    return it == entries_.end() ? nullptr : &*it;
}

const AircraftSpec& Catalog::at(std::string_view shortcut) const {
    const AircraftSpec* spec = find(shortcut);
    if (spec == nullptr) {
        throw ConfigurationError("catalog: unknown shortcut '" + std::string(shortcut) + "'");
    }
    return *spec;
}

}  // namespace airtype
