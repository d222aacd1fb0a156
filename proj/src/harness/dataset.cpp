#include "cdcp/harness/dataset.hpp"

#include <algorithm>
#include <filesystem>
#include <map>

#include "cdcp/core/types.hpp"

namespace fs = std::filesystem;

namespace cdcp::harness {

namespace {

bool has_extension(const fs::path& p, std::initializer_list<const char*> exts) {
    std::string e = p.extension().string();
    std::transform(e.begin(), e.end(), e.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (const char* want : exts)
        if (e == want) return true;
    return false;
}

struct Roles {
    std::string rgb, depth, gt;
};

void assign_role(std::map<std::string, Roles>& stems, const std::string& stem,
                 std::string Roles::*role, const fs::path& path, const char* role_name) {
    Roles& r = stems[stem];
    if (!(r.*role).empty())
        throw Error("discover_dataset: duplicate " + std::string(role_name) + " for stem '" +
                    stem + "' (" + (r.*role) + " and " + path.string() + ")");
    r.*role = path.string();
}

void scan_dir(const fs::path& dir, std::map<std::string, Roles>& stems, std::string Roles::*role,
              const char* role_name, std::initializer_list<const char*> exts) {
    for (const fs::directory_entry& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        if (!has_extension(entry.path(), exts)) continue;
        assign_role(stems, entry.path().stem().string(), role, entry.path(), role_name);
    }
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

DatasetIndex build_index(const fs::path& root, std::map<std::string, Roles>& stems) {
    DatasetIndex index;
    index.name = root.filename().string();
    if (index.name.empty()) index.name = root.parent_path().filename().string();
    for (auto& [stem, roles] : stems) {  // std::map iterates stems in sorted order
        if (!roles.rgb.empty() && !roles.depth.empty() && !roles.gt.empty()) {
            index.samples.push_back({stem, roles.rgb, roles.depth, roles.gt});
        } else {
            std::string missing;
            if (roles.rgb.empty()) missing += "rgb";
            if (roles.depth.empty()) missing += missing.empty() ? "depth" : ",depth";
            if (roles.gt.empty()) missing += missing.empty() ? "gt" : ",gt";
            index.skipped.push_back({stem, missing});
        }
    }
    if (index.samples.empty())
        throw Error("discover_dataset: no complete rgb/depth/gt triples under " + root.string());
    return index;
}

}  // namespace

DatasetLayout layout_from_name(const std::string& name) {
    if (name == "auto") return DatasetLayout::kAuto;
    if (name == "flat-suffix" || name == "flat") return DatasetLayout::kFlatSuffix;
    if (name == "subdirs") return DatasetLayout::kSubdirs;
    throw Error("unknown dataset layout: " + name + " (want auto, flat-suffix, or subdirs)");
}

DatasetIndex discover_dataset(const std::string& root_str, DatasetLayout layout) {
    const fs::path root(root_str);
    if (!fs::is_directory(root)) throw Error("discover_dataset: not a directory: " + root_str);

    if (layout == DatasetLayout::kAuto) {
        const bool subdirs = fs::is_directory(root / "RGB") && fs::is_directory(root / "depth") &&
                             fs::is_directory(root / "GT");
        layout = subdirs ? DatasetLayout::kSubdirs : DatasetLayout::kFlatSuffix;
    }

    std::map<std::string, Roles> stems;
    if (layout == DatasetLayout::kSubdirs) {
        for (const char* sub : {"RGB", "depth", "GT"})
            if (!fs::is_directory(root / sub))
                throw Error("discover_dataset: missing subdirectory " + (root / sub).string());
        scan_dir(root / "RGB", stems, &Roles::rgb, "rgb", {".png", ".jpg", ".jpeg"});
        scan_dir(root / "depth", stems, &Roles::depth, "depth", {".png"});
        scan_dir(root / "GT", stems, &Roles::gt, "gt", {".png"});
    } else {
        for (const fs::directory_entry& entry : fs::directory_iterator(root)) {
            if (!entry.is_regular_file()) continue;
            const fs::path& path = entry.path();
            const std::string stem = path.stem().string();
            if (ends_with(stem, "_rgb") && has_extension(path, {".png", ".jpg", ".jpeg"}))
                assign_role(stems, stem.substr(0, stem.size() - 4), &Roles::rgb, path, "rgb");
            else if (ends_with(stem, "_depth") && has_extension(path, {".png"}))
                assign_role(stems, stem.substr(0, stem.size() - 6), &Roles::depth, path, "depth");
            else if (ends_with(stem, "_gt") && has_extension(path, {".png"}))
                assign_role(stems, stem.substr(0, stem.size() - 3), &Roles::gt, path, "gt");
        }
    }
    return build_index(root, stems);
}

}  // namespace cdcp::harness
