#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "airtype/errors.hpp"

namespace airtype {

/// One aircraft type with its manufacturer-published length.
struct AircraftSpec {
    std::string full_name;
    std::string shortcut;
    double actual_length_m = 0.0;

    friend bool operator==(const AircraftSpec&, const AircraftSpec&) = default;
};

/// Reference list of aircraft types. Entries are kept sorted by actual length
/// ascending (ties by shortcut) and shortcuts are unique.
class Catalog {
public:
    /// Throws ConfigurationError for an empty list, duplicate shortcuts, or
    /// non-positive lengths.
    explicit Catalog(std::vector<AircraftSpec> entries);

    /// Compiled-in default fleet list.
    static const Catalog& builtin();

    /// Parses CSV with header `name,shortcut,length_m`.
    static Catalog from_csv(std::istream& in);
    static Catalog from_csv_file(const std::filesystem::path& path);

    std::string to_csv() const;

    const std::vector<AircraftSpec>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }

    const AircraftSpec* find(std::string_view shortcut) const;
    bool contains(std::string_view shortcut) const { return find(shortcut) != nullptr; }

    /// Throws ConfigurationError when the shortcut is unknown.
    const AircraftSpec& at(std::string_view shortcut) const;

private:
    std::vector<AircraftSpec> entries_;
};

}  // namespace airtype
