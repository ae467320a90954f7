// Copyright 2026 Stopline Toolkit Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stopline/gmap_io.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <set>

namespace stopline {

namespace {

constexpr char kMagic[4] = {'G', 'M', 'A', 'P'};

void append_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void append_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xFF));
}

void append_i32(std::vector<std::uint8_t>& out, std::int32_t v) {
  append_u32(out, static_cast<std::uint32_t>(v));
}

void append_f32(std::vector<std::uint8_t>& out, float v) {
  append_u32(out, std::bit_cast<std::uint32_t>(v));
}

class Cursor {
 public:
  Cursor(const std::vector<std::uint8_t>& buf) : buf_(buf) {}

  std::size_t offset() const { return pos_; }

  void require(std::size_t n, const char* what) const {
    if (pos_ + n > buf_.size()) {
      throw FormatError(std::string("truncated file while reading ") + what, pos_);
    }
  }

  std::uint16_t read_u16(const char* what) {
    require(2, what);
    std::uint16_t v = static_cast<std::uint16_t>(buf_[pos_] | (buf_[pos_ + 1] << 8));
    pos_ += 2;
    return v;
  }

  std::uint32_t read_u32(const char* what) {
    require(4, what);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(buf_[pos_ + i]) << (8 * i);
    pos_ += 4;
    return v;
  }

  std::int32_t read_i32(const char* what) { return static_cast<std::int32_t>(read_u32(what)); }

  float read_f32(const char* what) { return std::bit_cast<float>(read_u32(what)); }

  bool at_end() const { return pos_ == buf_.size(); }

 private:
  const std::vector<std::uint8_t>& buf_;
  std::size_t pos_{0};
};

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  }
  std::vector<std::uint8_t> buf((std::istreambuf_iterator<char>(in)),
                                std::istreambuf_iterator<char>());
  return buf;
}

}  // namespace

void write_gmap(const std::filesystem::path& path, const GmapPayload& payload) {
  payload.geo.validate();
  if (payload.channels.size() > 0xFFFF) {
    throw std::invalid_argument("too many channels for the GMAP container");
  }
  {
    std::set<std::uint16_t> seen;
    for (const auto& ch : payload.channels) {
      if (!seen.insert(ch.id).second) {
        throw std::invalid_argument("duplicate channel id " + std::to_string(ch.id));
      }
      if (ch.data.size() != payload.geo.cell_count()) {
        throw std::invalid_argument("channel " + std::to_string(ch.id) +
                                    " raster size does not match the header dimensions");
      }
    }
  }

  std::vector<std::uint8_t> buf;
  buf.reserve(32 + payload.channels.size() * (2 + payload.geo.cell_count() * 4));
  buf.insert(buf.end(), kMagic, kMagic + 4);
  append_u16(buf, kGmapVersion);
  append_u16(buf, static_cast<std::uint16_t>(payload.channels.size()));
  append_u32(buf, static_cast<std::uint32_t>(payload.geo.height));
  append_u32(buf, static_cast<std::uint32_t>(payload.geo.width));
  append_u32(buf, static_cast<std::uint32_t>(std::llround(payload.geo.resolution * 1e6)));
  append_u32(buf, static_cast<std::uint32_t>(payload.geo.ego_row));
  append_u32(buf, static_cast<std::uint32_t>(payload.geo.ego_col));
  append_i32(buf, static_cast<std::int32_t>(std::llround(payload.geo.ego_heading * 1e6)));
  for (const auto& ch : payload.channels) {
    append_u16(buf, ch.id);
    for (float v : ch.data) append_f32(buf, v);
  }

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!out) {
    throw std::runtime_error("short write to '" + path.string() + "'");
  }
}

GmapPayload read_gmap(const std::filesystem::path& path) {
  const std::vector<std::uint8_t> buf = read_file(path);
  Cursor cur(buf);

  cur.require(4, "magic");
  if (std::memcmp(buf.data(), kMagic, 4) != 0) {
    throw FormatError("bad magic, not a GMAP file", 0);
  }
  Cursor skip_magic(buf);
  (void)skip_magic;
  // consume magic
  cur.read_u32("magic");

  const std::size_t version_off = cur.offset();
  const std::uint16_t version = cur.read_u16("version");
  if (version != kGmapVersion) {
    throw FormatError("unsupported GMAP version " + std::to_string(version), version_off);
  }
  const std::uint16_t channel_count = cur.read_u16("channel count");

  GmapPayload payload;
  payload.geo.height = static_cast<int>(cur.read_u32("height"));
  payload.geo.width = static_cast<int>(cur.read_u32("width"));
  payload.geo.resolution = cur.read_u32("resolution") / 1e6;
  payload.geo.ego_row = static_cast<int>(cur.read_u32("ego row"));
  payload.geo.ego_col = static_cast<int>(cur.read_u32("ego col"));
  payload.geo.ego_heading = cur.read_i32("ego heading") / 1e6;
  try {
    payload.geo.validate();
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("invalid geometry header: ") + e.what(), 8);
  }

  std::set<std::uint16_t> seen;
  for (std::uint16_t k = 0; k < channel_count; ++k) {
    GmapChannel ch;
    const std::size_t id_off = cur.offset();
    ch.id = cur.read_u16("channel id");
    if (!seen.insert(ch.id).second) {
      throw FormatError("duplicated channel id " + std::to_string(ch.id), id_off);
    }
    ch.data.resize(payload.geo.cell_count());
    cur.require(ch.data.size() * 4, "channel raster");
    for (float& v : ch.data) v = cur.read_f32("channel raster");
    payload.channels.push_back(std::move(ch));
  }
  if (!cur.at_end()) {
    throw FormatError("trailing bytes after the last channel", cur.offset());
  }
  return payload;
}

void save_grid_map(const std::filesystem::path& path, const GridMap& grid) {
  GmapPayload payload;
  payload.geo = grid.geometry();
  for (ChannelId id : grid.channel_ids()) {
    GmapChannel ch;
    ch.id = static_cast<std::uint16_t>(id);
    auto span = grid.channel(id);
    ch.data.assign(span.begin(), span.end());
    payload.channels.push_back(std::move(ch));
  }
  write_gmap(path, payload);
}

GridMap load_grid_map(const std::filesystem::path& path) {
  const GmapPayload payload = read_gmap(path);
  std::vector<ChannelId> ids;
  for (const auto& ch : payload.channels) {
    if (ch.id >= kAllChannels.size()) {
      throw FormatError("channel id " + std::to_string(ch.id) + " is not a grid-map layer", 0);
    }
    ids.push_back(static_cast<ChannelId>(ch.id));
  }
  GridMap grid(ids, payload.geo);
  for (const auto& ch : payload.channels) {
    auto dst = grid.channel(static_cast<ChannelId>(ch.id));
    std::copy(ch.data.begin(), ch.data.end(), dst.begin());
  }
  return grid;
}

void save_mask(const std::filesystem::path& path, const SegMask& mask) {
  GmapPayload payload;
  payload.geo = mask.geo;
  GmapChannel ch;
  ch.id = kMaskChannelId;
  ch.data.resize(mask.data.size());
  for (std::size_t i = 0; i < mask.data.size(); ++i) ch.data[i] = mask.data[i] ? 1.0f : 0.0f;
  payload.channels.push_back(std::move(ch));
  write_gmap(path, payload);
}

SegMask load_mask(const std::filesystem::path& path) {
  const GmapPayload payload = read_gmap(path);
  if (payload.channels.size() != 1 || payload.channels[0].id != kMaskChannelId) {
    throw FormatError("expected a single mask channel (id " + std::to_string(kMaskChannelId) +
                          ")",
                      32);
  }
  SegMask mask(payload.geo);
  const auto& data = payload.channels[0].data;
  for (std::size_t i = 0; i < data.size(); ++i) mask.data[i] = data[i] > 0.5f ? 1 : 0;
  return mask;
}

void save_distance_map(const std::filesystem::path& path, const DistanceMap& map) {
  GmapPayload payload;
  payload.geo = map.geo;
  GmapChannel ch;
  ch.id = kDistanceChannelId;
  ch.data.assign(map.values.begin(), map.values.end());
  payload.channels.push_back(std::move(ch));
  write_gmap(path, payload);
}

DistanceMap load_distance_map(const std::filesystem::path& path, int d_thresh) {
  const GmapPayload payload = read_gmap(path);
  if (payload.channels.size() != 1 || payload.channels[0].id != kDistanceChannelId) {
    throw FormatError("expected a single distance channel (id " +
                          std::to_string(kDistanceChannelId) + ")",
                      32);
  }
  DistanceMap map;
  map.geo = payload.geo;
  map.d_thresh = d_thresh;
  map.values.assign(payload.channels[0].data.begin(), payload.channels[0].data.end());
  return map;
}

void save_direction_map(const std::filesystem::path& path, const DirectionMap& map) {
  GmapPayload payload;
  payload.geo = map.geo;
  GmapChannel dx;
  dx.id = kDirectionDxChannelId;
  dx.data.assign(map.dx.begin(), map.dx.end());
  GmapChannel dy;
  dy.id = kDirectionDyChannelId;
  dy.data.assign(map.dy.begin(), map.dy.end());
  payload.channels.push_back(std::move(dx));
  payload.channels.push_back(std::move(dy));
  write_gmap(path, payload);
}

DirectionMap load_direction_map(const std::filesystem::path& path, int d_thresh) {
  const GmapPayload payload = read_gmap(path);
  if (payload.channels.size() != 2 || payload.channels[0].id != kDirectionDxChannelId ||
      payload.channels[1].id != kDirectionDyChannelId) {
    throw FormatError("expected direction channels (ids " +
                          std::to_string(kDirectionDxChannelId) + "," +
                          std::to_string(kDirectionDyChannelId) + ")",
                      32);
  }
  DirectionMap map;
  map.geo = payload.geo;
  map.d_thresh = d_thresh;
  map.dx.assign(payload.channels[0].data.begin(), payload.channels[0].data.end());
  map.dy.assign(payload.channels[1].data.begin(), payload.channels[1].data.end());
  return map;
}

}  // namespace stopline
