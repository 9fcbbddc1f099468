// Copyright 2026 The qsnn Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file mnist.hpp
 * IDX-format image/label ingestion. Handles both plain and gzip-compressed
 * files transparently (zlib).
 */
#pragma once

#include <zlib.h>

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsnn::data {

struct Sample {
    std::vector<double> pixels;  // row-major, scaled to [0, 1]
    int label = 0;               // in [0, 10)
};

struct Dataset {
    std::vector<Sample> samples;
    int rows = 0;
    int cols = 0;

    std::size_t size() const { return samples.size(); }
};

inline constexpr std::uint32_t kIdxImagesMagic = 0x00000803;  // 2051
inline constexpr std::uint32_t kIdxLabelsMagic = 0x00000801;  // 2049

namespace detail {

/// Sequential reader over a (possibly gzipped) IDX file that tracks the
/// logical byte offset for error messages.
class IdxReader {
  public:
    explicit IdxReader(const std::string& path) : path_(path) {
        file_ = gzopen(path.c_str(), "rb");
        if (!file_) {
            throw std::runtime_error("cannot open " + path);
        }
    }
    ~IdxReader() {
        if (file_) gzclose(file_);
    }
    IdxReader(const IdxReader&) = delete;
    IdxReader& operator=(const IdxReader&) = delete;

    void read_bytes(void* dst, std::size_t n) {
        const int got = gzread(file_, dst, static_cast<unsigned>(n));
        if (got < 0 || static_cast<std::size_t>(got) != n) {
            throw std::runtime_error(path_ + ": unexpected end of file at byte " +
                                     std::to_string(offset_ + std::max(got, 0)));
        }
        offset_ += n;
    }

    std::uint32_t read_u32be() {
        unsigned char b[4];
        read_bytes(b, 4);
        return (std::uint32_t{b[0]} << 24) | (std::uint32_t{b[1]} << 16) |
               (std::uint32_t{b[2]} << 8) | std::uint32_t{b[3]};
    }

    std::size_t offset() const { return offset_; }
    const std::string& path() const { return path_; }

  private:
    std::string path_;
    gzFile file_ = nullptr;
    std::size_t offset_ = 0;
};

inline std::string hex_magic(std::uint32_t m) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "0x%08x", m);
    return buf;
}

}  // namespace detail

/**
 * @brief Loads an IDX image/label file pair into a Dataset.
 *
 * Pixels are scaled to [0, 1] by dividing by 255; sample order is preserved
 * from the file. Format violations (wrong magic, truncation, image/label
 * count mismatch, label outside [0, 10)) raise std::runtime_error naming
 * the offending file and byte offset.
 */
inline Dataset load_idx(const std::string& images_path,
                        const std::string& labels_path) {
    detail::IdxReader images(images_path);
    const std::uint32_t imagic = images.read_u32be();
    if (imagic != kIdxImagesMagic) {
        throw std::runtime_error(images_path + ": bad magic " +
                                 detail::hex_magic(imagic) + " (expected " +
                                 detail::hex_magic(kIdxImagesMagic) +
                                 ") at byte 0");
    }
    const std::uint32_t n_images = images.read_u32be();
    const std::uint32_t rows = images.read_u32be();
    const std::uint32_t cols = images.read_u32be();
    if (rows == 0 || cols == 0 || rows > 4096 || cols > 4096) {
        throw std::runtime_error(images_path + ": implausible dimensions " +
                                 std::to_string(rows) + "x" +
                                 std::to_string(cols) + " at byte 8");
    }

    detail::IdxReader labels(labels_path);
    const std::uint32_t lmagic = labels.read_u32be();
    if (lmagic != kIdxLabelsMagic) {
        throw std::runtime_error(labels_path + ": bad magic " +
                                 detail::hex_magic(lmagic) + " (expected " +
                                 detail::hex_magic(kIdxLabelsMagic) +
                                 ") at byte 0");
    }
    const std::uint32_t n_labels = labels.read_u32be();
    if (n_images != n_labels) {
        throw std::runtime_error(images_path + " has " +
                                 std::to_string(n_images) + " items but " +
                                 labels_path + " has " +
                                 std::to_string(n_labels));
    }

    Dataset ds;
    ds.rows = static_cast<int>(rows);
    ds.cols = static_cast<int>(cols);
    ds.samples.resize(n_images);
    const std::size_t n_pixels = static_cast<std::size_t>(rows) * cols;
    std::vector<unsigned char> buf(n_pixels);
    for (std::uint32_t i = 0; i < n_images; ++i) {
        images.read_bytes(buf.data(), n_pixels);
        Sample& s = ds.samples[i];
        s.pixels.resize(n_pixels);
        for (std::size_t p = 0; p < n_pixels; ++p) {
            s.pixels[p] = buf[p] / 255.0;
        }
        unsigned char label = 0;
        const std::size_t label_offset = labels.offset();
        labels.read_bytes(&label, 1);
        if (label > 9) {
            throw std::runtime_error(labels_path + ": label " +
                                     std::to_string(int{label}) +
                                     " outside [0, 10) at byte " +
                                     std::to_string(label_offset));
        }
        s.label = label;
    }
    return ds;
}

/// Resolves `<dir>/<base>`, falling back to `<base>.gz`. Throws when
/// neither exists.
inline std::string resolve_idx_path(const std::string& dir,
                                    const std::string& base) {
    namespace fs = std::filesystem;
    const fs::path plain = fs::path(dir) / base;
    if (fs::exists(plain)) return plain.string();
    const fs::path gz = fs::path(dir) / (base + ".gz");
    if (fs::exists(gz)) return gz.string();
    throw std::runtime_error("missing data file " + plain.string() +
                             " (also tried .gz)");
}

/// Loads the train or test split from a directory holding the four
/// canonical files (optionally gzipped).
inline Dataset load_mnist_split(const std::string& dir, bool train) {
    const std::string img = train ? "train-images-idx3-ubyte" : "t10k-images-idx3-ubyte";
    const std::string lab = train ? "train-labels-idx1-ubyte" : "t10k-labels-idx1-ubyte";
    return load_idx(resolve_idx_path(dir, img), resolve_idx_path(dir, lab));
}

}  // namespace qsnn::data
