#pragma once

#include <string>
#include <vector>

namespace cdcp::harness {

enum class DatasetLayout {
    kAuto,        // subdirs when RGB/, depth/ and GT/ all exist, else flat-suffix
    kFlatSuffix,  // stem_rgb.png / stem_depth.png / stem_gt.png side by side
    kSubdirs,     // RGB/stem.png, depth/stem.png, GT/stem.png
};

DatasetLayout layout_from_name(const std::string& name);

struct Sample {
    std::string stem;
    std::string rgb_path;
    std::string depth_path;
    std::string gt_path;
};

struct SkipEntry {
    std::string stem;
    std::string missing;  // e.g. "depth" or "depth,gt"
};

struct DatasetIndex {
    std::string name;
    std::vector<Sample> samples;     // sorted by stem
    std::vector<SkipEntry> skipped;  // sorted by stem
};

// Walks one directory level and matches triples by stem. RGB accepts
// .png/.jpg/.jpeg, depth and GT are PNG. A stem appearing twice in one role
// (say a.png and a.jpg both as RGB) is an error naming the stem; a stem
// missing a role becomes a skip entry. Zero complete triples is an error.
DatasetIndex discover_dataset(const std::string& root, DatasetLayout layout);

}  // namespace cdcp::harness
