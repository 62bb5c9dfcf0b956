#include "inversive/document.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace inversive {

using nlohmann::json;

namespace {

double finite_number(const json &value, const std::string &where) {
    if (!value.is_number()) throw DocumentError(where + ": expected a number");
    const double v = value.get<double>();
    if (!std::isfinite(v)) throw DocumentError(where + ": number is not finite");
    return v;
}

std::vector<double> number_array(const json &record, const char *key, const std::string &where) {
    if (!record.contains(key)) throw DocumentError(where + ": missing \"" + key + "\"");
    const json &arr = record.at(key);
    if (!arr.is_array()) throw DocumentError(where + ": \"" + key + "\" must be an array");
    std::vector<double> out;
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(finite_number(arr[i], where + "." + key + "[" + std::to_string(i) + "]"));
    return out;
}

double radius_of(const json &record, const std::string &where) {
    if (!record.contains("radius")) throw DocumentError(where + ": missing \"radius\"");
    const double r = finite_number(record.at("radius"), where + ".radius");
    if (r == 0.0) throw DocumentError(where + ": radius must be nonzero");
    return r;
}

}  // namespace

DiskDocument parse_disk_document(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error &e) {
        throw DocumentError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw DocumentError("document must be a JSON object");
    if (!root.contains("disks") || !root.at("disks").is_array())
        throw DocumentError("document must contain a \"disks\" array");

    DiskDocument doc;
    if (root.contains("dim")) {
        const json &d = root.at("dim");
        if (!d.is_number_integer() || d.get<long long>() < 2) throw DocumentError("\"dim\" must be an integer >= 2");
        doc.dim = d.get<int>();
    }

    const json &records = root.at("disks");
    for (const auto &rec : records)
        if (rec.is_object() && rec.value("type", "") == "sphere" && !doc.dim) {
            const auto &center = rec.contains("center") ? rec.at("center") : json();
            if (!center.is_array() || center.size() < 2) throw DocumentError("sphere center needs at least 2 components");
            doc.dim = int(center.size());
        }

    for (std::size_t i = 0; i < records.size(); ++i) {
        const std::string where = "disks[" + std::to_string(i) + "]";
        const json &rec = records[i];
        if (!rec.is_object() || !rec.contains("type") || !rec.at("type").is_string())
            throw DocumentError(where + ": record needs a string \"type\"");
        const std::string type = rec.at("type").get<std::string>();

        if (type == "circle") {
            const auto center = number_array(rec, "center", where);
            if (center.size() != 2) throw DocumentError(where + ": circle center needs 2 components");
            const double r = radius_of(rec, where);
            if (doc.dim) {
                if (*doc.dim != 2) throw DocumentError(where + ": circle record in a dim " + std::to_string(*doc.dim) + " document");
                doc.spheres.push_back({center, r});
            } else {
                doc.disks.push_back(Circle{{center[0], center[1]}, r});
            }
        } else if (type == "halfplane") {
            if (doc.dim) throw DocumentError(where + ": halfplanes are only supported in planar documents");
            const auto normal = number_array(rec, "normal", where);
            if (normal.size() != 2) throw DocumentError(where + ": halfplane normal needs 2 components");
            if (!rec.contains("offset")) throw DocumentError(where + ": missing \"offset\"");
            const double offset = finite_number(rec.at("offset"), where + ".offset");
            const double len = std::hypot(normal[0], normal[1]);
            if (std::abs(len - 1.0) > 1e-9) throw DocumentError(where + ": halfplane normal must be a unit vector");
            doc.disks.push_back(Halfplane{{normal[0] / len, normal[1] / len}, offset});
        } else if (type == "sphere") {
            const auto center = number_array(rec, "center", where);
            if (int(center.size()) != *doc.dim)
                throw DocumentError(where + ": sphere center has " + std::to_string(center.size()) +
                                    " components, document dim is " + std::to_string(*doc.dim));
            doc.spheres.push_back({center, radius_of(rec, where)});
        } else {
            throw DocumentError(where + ": unknown type \"" + type + "\"");
        }
    }
    return doc;
}

DiskDocument load_disk_document(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_disk_document(buf.str());
}

double json_number(double v) { return v == 0.0 ? 0.0 : v; }

nlohmann::ordered_json disk_record(const Disk &d) {
    nlohmann::ordered_json rec;
    if (const auto *c = std::get_if<Circle>(&d)) {
        rec["type"] = "circle";
        rec["center"] = {json_number(c->center.x), json_number(c->center.y)};
        rec["radius"] = json_number(c->radius);
    } else {
        const auto &h = std::get<Halfplane>(d);
        rec["type"] = "halfplane";
        rec["normal"] = {json_number(h.normal.x), json_number(h.normal.y)};
        rec["offset"] = json_number(h.offset);
    }
    return rec;
}

}  // namespace inversive
