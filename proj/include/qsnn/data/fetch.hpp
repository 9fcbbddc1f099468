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
 * @file fetch.hpp
 * Checksummed download of the canonical dataset files. This is the only
 * part of the library that touches the network; targets including it must
 * link OpenSSL.
 */
#pragma once

#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>
#include <openssl/evp.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsnn::data {

struct FetchItem {
    std::string filename;
    std::string md5_hex;
};

/// The four canonical MNIST archives with their published MD5 checksums.
inline const std::vector<FetchItem>& mnist_manifest() {
    static const std::vector<FetchItem> items = {
        {"train-images-idx3-ubyte.gz", "f68b3c2dcbeaaa9fbdd348bbdeb94873"},
        {"train-labels-idx1-ubyte.gz", "d53e105ee54ea40749a09fcbcd1e9432"},
        {"t10k-images-idx3-ubyte.gz", "9fb629c4189551a2d022fa330f9573f3"},
        {"t10k-labels-idx1-ubyte.gz", "ec29112dd5afa0611ce80d1b7f02629c"},
    };
    return items;
}

inline constexpr const char* kDefaultMirror =
    "https://ossci-datasets.s3.amazonaws.com/mnist/";

inline std::string md5_hex_of_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("md5: cannot open " + path);
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx) throw std::runtime_error("md5: EVP context allocation failed");
    EVP_DigestInit_ex(ctx, EVP_md5(), nullptr);
    char buf[1 << 16];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, digest, &len);
    EVP_MD_CTX_free(ctx);
    std::string hex(2 * len, '0');
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(hex.data() + 2 * i, 3, "%02x", digest[i]);
    }
    return hex;
}

namespace detail {

struct SplitUrl {
    std::string origin;  // scheme://host[:port]
    std::string path;    // leading and trailing slash guaranteed
};

inline SplitUrl split_url(const std::string& url) {
    const std::size_t scheme_end = url.find("://");
    if (scheme_end == std::string::npos) {
        throw std::invalid_argument("fetch: URL without scheme: " + url);
    }
    const std::size_t slash = url.find('/', scheme_end + 3);
    SplitUrl out;
    if (slash == std::string::npos) {
        out.origin = url;
        out.path = "/";
    } else {
        out.origin = url.substr(0, slash);
        out.path = url.substr(slash);
    }
    if (out.path.back() != '/') out.path += '/';
    return out;
}

}  // namespace detail

struct FetchResult {
    int downloaded = 0;
    int up_to_date = 0;
};

/**
 * @brief Downloads every manifest item into cache_dir, verifying MD5 sums.
 *
 * Files already present with the right checksum are skipped; files with a
 * wrong checksum are re-fetched. Downloads go to a .part file which is
 * renamed into place only after verification, so a failed transfer never
 * leaves a corrupt file behind. Any failure throws std::runtime_error after
 * cleaning up the partial file.
 */
inline FetchResult fetch_files(const std::string& base_url,
                               const std::string& cache_dir,
                               const std::vector<FetchItem>& items,
                               std::ostream& log) {
    namespace fs = std::filesystem;
    const detail::SplitUrl url = detail::split_url(base_url);
    fs::create_directories(cache_dir);

    FetchResult result;
    for (const FetchItem& item : items) {
        const fs::path target = fs::path(cache_dir) / item.filename;
        if (fs::exists(target)) {
            if (md5_hex_of_file(target.string()) == item.md5_hex) {
                log << item.filename << ": up to date\n";
                ++result.up_to_date;
                continue;
            }
            log << item.filename << ": checksum mismatch, re-fetching\n";
        }

        const fs::path partial = target.string() + ".part";
        {
            httplib::Client client(url.origin);
            client.set_follow_location(true);
            client.set_connection_timeout(30);
            client.set_read_timeout(120);
            std::ofstream out(partial, std::ios::binary | std::ios::trunc);
            if (!out) {
                throw std::runtime_error("fetch: cannot write " +
                                         partial.string());
            }
            auto res = client.Get(url.path + item.filename,
                                  [&](const char* data, std::size_t n) {
                                      out.write(data, n);
                                      return out.good();
                                  });
            out.close();
            if (!res || res->status != 200) {
                fs::remove(partial);
                const std::string why =
                    res ? "HTTP " + std::to_string(res->status)
                        : "transport error: " + httplib::to_string(res.error());
                throw std::runtime_error("fetch: " + base_url + item.filename +
                                         " failed (" + why + ")");
            }
        }

        const std::string got = md5_hex_of_file(partial.string());
        if (got != item.md5_hex) {
            fs::remove(partial);
            throw std::runtime_error("fetch: " + item.filename +
                                     " checksum mismatch (expected " +
                                     item.md5_hex + ", got " + got + ")");
        }
        fs::rename(partial, target);
        log << item.filename << ": downloaded\n";
        ++result.downloaded;
    }
    return result;
}

}  // namespace qsnn::data
