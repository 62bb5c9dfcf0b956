#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "inversive/minkowski.hpp"
#include "inversive/nsphere.hpp"

namespace inversive {

/// Malformed or invalid input document.
class DocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parsed disk document.
///
///   {"disks": [{"type": "circle", "center": [x, y], "radius": r},
///              {"type": "halfplane", "normal": [nx, ny], "offset": c},
///              {"type": "sphere", "center": [x1, ..., xn], "radius": r}],
///    "dim": n}
///
/// A document is n-dimensional when it declares "dim" or holds a sphere
/// record; all its records then land in `spheres` (circle records are
/// accepted as 2-spheres when dim is 2). Otherwise records land in `disks`.
struct DiskDocument {
    std::optional<int> dim;
    std::vector<Disk> disks;
    std::vector<NSphere> spheres;

    bool is_ndim() const { return dim.has_value(); }
};

DiskDocument parse_disk_document(std::string_view text);
DiskDocument load_disk_document(const std::filesystem::path &path);

/// {"type": "circle", ...} / {"type": "halfplane", ...} record for a disk.
nlohmann::ordered_json disk_record(const Disk &d);

/// JSON number with negative zero folded to zero.
double json_number(double v);

}  // namespace inversive
