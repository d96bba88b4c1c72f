// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#include "cban/core/archive.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <set>

#include <zlib.h>

#include "cban/core/errors.hpp"
#include "cban/core/hash.hpp"

namespace cban {

namespace {

constexpr std::size_t kBlock = 512;

std::string gzip_compress(std::string_view data) {
  z_stream strm{};
  if (deflateInit2(&strm, Z_DEFAULT_COMPRESSION, Z_DEFLATED, 15 + 16, 8,
                   Z_DEFAULT_STRATEGY) != Z_OK) {
    throw Error(Errc::io_error, "deflateInit2 failed");
  }
  gz_header header{};
  header.os = 3;  // unix, pinned so output does not vary by build host
  deflateSetHeader(&strm, &header);

  std::string out;
  std::array<unsigned char, 64 * 1024> buf;
  strm.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
  strm.avail_in = static_cast<uInt>(data.size());
  int rc = Z_OK;
  do {
    strm.next_out = buf.data();
    strm.avail_out = static_cast<uInt>(buf.size());
    rc = deflate(&strm, Z_FINISH);
    if (rc == Z_STREAM_ERROR) {
      deflateEnd(&strm);
      throw Error(Errc::io_error, "deflate failed");
    }
    out.append(reinterpret_cast<char*>(buf.data()), buf.size() - strm.avail_out);
  } while (rc != Z_STREAM_END);
  deflateEnd(&strm);
  return out;
}

std::string gzip_decompress(std::string_view data, std::uint64_t max_out) {
  z_stream strm{};
  if (inflateInit2(&strm, 15 + 32) != Z_OK) {
    throw Error(Errc::bad_archive, "inflateInit2 failed");
  }
  std::string out;
  std::array<unsigned char, 64 * 1024> buf;
  strm.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
  strm.avail_in = static_cast<uInt>(data.size());
  int rc = Z_OK;
  do {
    strm.next_out = buf.data();
    strm.avail_out = static_cast<uInt>(buf.size());
    rc = inflate(&strm, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) {
      inflateEnd(&strm);
      throw Error(Errc::bad_archive, "corrupt gzip stream");
    }
    out.append(reinterpret_cast<char*>(buf.data()), buf.size() - strm.avail_out);
    if (out.size() > max_out) {
      inflateEnd(&strm);
      throw Error(Errc::bad_archive, "unpacked size exceeds limit");
    }
  } while (rc != Z_STREAM_END && (strm.avail_in > 0 || strm.avail_out == 0));
  inflateEnd(&strm);
  if (rc != Z_STREAM_END || strm.avail_in != 0) {
    throw Error(Errc::bad_archive, "truncated or trailing gzip data");
  }
  return out;
}

void put_octal(char* field, std::size_t width, std::uint64_t value) {
  // width includes the trailing NUL
  for (std::size_t i = width - 1; i-- > 0;) {
    field[i] = static_cast<char>('0' + (value & 7));
    value >>= 3;
  }
  field[width - 1] = '\0';
}

std::uint64_t parse_octal(const char* field, std::size_t width) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < width; ++i) {
    char c = field[i];
    if (c == '\0' || c == ' ') break;
    if (c < '0' || c > '7') {
      throw Error(Errc::bad_archive, "bad octal field in tar header");
    }
    value = value * 8 + static_cast<std::uint64_t>(c - '0');
  }
  return value;
}

struct TarHeaderView {
  const char* raw;
  std::string_view field(std::size_t offset, std::size_t len) const {
    std::size_t n = 0;
    while (n < len && raw[offset + n] != '\0') ++n;
    return {raw + offset, n};
  }
};

void append_header(std::string& tar, const std::string& path, std::uint64_t size,
                   unsigned mode, char typeflag) {
  std::array<char, kBlock> h{};
  std::string name = path;
  std::string prefix;
  if (name.size() > 100) {
    // ustar prefix split at a '/' so that both halves fit
    std::size_t cut = std::string::npos;
    for (std::size_t i = 0; i < name.size(); ++i) {
      if (name[i] == '/' && i <= 154 && name.size() - i - 1 <= 100) {
        cut = i;  // keep the latest split that fits
      }
    }
    if (cut == std::string::npos) {
      throw Error(Errc::bad_archive, "path too long for ustar: " + path);
    }
    prefix = name.substr(0, cut);
    name = name.substr(cut + 1);
  }
  std::memcpy(h.data(), name.data(), name.size());
  put_octal(h.data() + 100, 8, mode);
  put_octal(h.data() + 108, 8, 0);
  put_octal(h.data() + 116, 8, 0);
  put_octal(h.data() + 124, 12, size);
  put_octal(h.data() + 136, 12, 0);
  std::memset(h.data() + 148, ' ', 8);
  h[156] = typeflag;
  std::memcpy(h.data() + 257, "ustar", 6);
  h[263] = '0';
  h[264] = '0';
  std::memcpy(h.data() + 345, prefix.data(), prefix.size());
  unsigned checksum = 0;
  for (unsigned char c : h) checksum += c;
  put_octal(h.data() + 148, 7, checksum);
  h[155] = ' ';
  tar.append(h.data(), kBlock);
}

}  // namespace

std::string write_archive(std::vector<ArchiveMember> members) {
  std::sort(members.begin(), members.end(),
            [](const ArchiveMember& a, const ArchiveMember& b) { return a.path < b.path; });
  std::set<std::string> seen;
  std::string tar;
  for (const ArchiveMember& m : members) {
    if (!is_safe_relpath(m.path)) {
      throw Error(Errc::unsafe_path, "archive member '" + m.path + "'");
    }
    if (!seen.insert(m.path).second) {
      throw Error(Errc::duplicate_path, "archive member '" + m.path + "'");
    }
    append_header(tar, m.path, m.data.size(), m.executable ? 0755 : 0644, '0');
    tar += m.data;
    if (m.data.size() % kBlock != 0) {
      tar.append(kBlock - m.data.size() % kBlock, '\0');
    }
  }
  tar.append(2 * kBlock, '\0');
  return gzip_compress(tar);
}

std::vector<ArchiveMember> read_archive(std::string_view bytes, std::uint64_t max_unpacked) {
  std::string tar = gzip_decompress(bytes, max_unpacked);
  if (tar.size() % kBlock != 0) {
    throw Error(Errc::bad_archive, "tar stream not block-aligned");
  }
  std::vector<ArchiveMember> members;
  std::set<std::string> seen;
  std::size_t off = 0;
  while (off + kBlock <= tar.size()) {
    const char* raw = tar.data() + off;
    bool all_zero = true;
    for (std::size_t i = 0; i < kBlock; ++i) {
      if (raw[i] != '\0') {
        all_zero = false;
        break;
      }
    }
    if (all_zero) break;  // end-of-archive marker

    TarHeaderView h{raw};
    if (h.field(257, 6) != "ustar") {
      throw Error(Errc::bad_archive, "missing ustar magic");
    }
    unsigned stored = static_cast<unsigned>(parse_octal(raw + 148, 8));
    unsigned computed = 0;
    for (std::size_t i = 0; i < kBlock; ++i) {
      computed += (i >= 148 && i < 156) ? ' ' : static_cast<unsigned char>(raw[i]);
    }
    if (stored != computed) {
      throw Error(Errc::bad_archive, "tar header checksum mismatch");
    }
    std::string path(h.field(345, 155));
    if (!path.empty()) path += "/";
    path += std::string(h.field(0, 100));
    std::uint64_t size = parse_octal(raw + 124, 12);
    unsigned mode = static_cast<unsigned>(parse_octal(raw + 100, 8));
    char typeflag = raw[156];
    off += kBlock;

    std::uint64_t padded = (size + kBlock - 1) / kBlock * kBlock;
    if (off + padded > tar.size()) {
      throw Error(Errc::bad_archive, "truncated member '" + path + "'");
    }
    if (typeflag == '0' || typeflag == '\0') {
      if (!is_safe_relpath(path)) {
        throw Error(Errc::bad_archive, "unsafe member path '" + path + "'");
      }
      if (!seen.insert(path).second) {
        throw Error(Errc::bad_archive, "duplicate member '" + path + "'");
      }
      ArchiveMember m;
      m.path = std::move(path);
      m.data = tar.substr(off, size);
      m.executable = (mode & 0111) != 0;
      members.push_back(std::move(m));
    } else if (typeflag == '5') {
      // directories carry no data we care about
    } else {
      throw Error(Errc::bad_archive,
                  std::string("unsupported tar entry type '") + typeflag + "'");
    }
    off += padded;
  }
  return members;
}

}  // namespace cban
