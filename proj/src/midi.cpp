/// @file
/// @brief Standard MIDI File (formats 0 and 1) ingestion.

#include "tma/midi.h"

#include <deque>
#include <map>
#include <utility>

#include "tma/errors.h"

namespace tma {
namespace {

class ByteReader {
 public:
  ByteReader(std::span<const std::uint8_t> bytes, std::size_t pos, std::size_t end)
      : bytes_(bytes), pos_(pos), end_(end) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ >= end_; }

  std::uint8_t u8() {
    if (pos_ >= end_) malformed("unexpected end of data");
    return bytes_[pos_++];
  }
  std::uint8_t peek() {
    if (pos_ >= end_) malformed("unexpected end of data");
    return bytes_[pos_];
  }
  std::uint32_t be(int width) {
    std::uint32_t v = 0;
    for (int k = 0; k < width; ++k) v = (v << 8) | u8();
    return v;
  }
  std::uint32_t varlen() {
    std::uint32_t v = 0;
    for (int k = 0; k < 4; ++k) {
      const std::uint8_t b = u8();
      v = (v << 7) | (b & 0x7Fu);
      if (!(b & 0x80u)) return v;
    }
    malformed("variable-length quantity longer than 4 bytes");
  }
  void skip(std::size_t n) {
    if (n > end_ - pos_) malformed("length runs past end of chunk");
    pos_ += n;
  }
  [[noreturn]] void malformed(const std::string& what) const {
    throw MidiError(MidiError::Kind::kMalformed, pos_, "MalformedMidi: " + what);
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_;
  std::size_t end_;
};

struct OpenNote {
  std::uint64_t tick;
};

void parse_track(ByteReader& in, int track, int tpq, MidiParseResult& out) {
  std::uint64_t tick = 0;
  std::uint8_t running = 0;
  std::map<std::pair<int, int>, std::deque<OpenNote>> open;

  auto close = [&](int channel, int pitch, std::uint64_t at) {
    auto it = open.find({channel, pitch});
    if (it == open.end() || it->second.empty()) return;
    const std::uint64_t start = it->second.front().tick;
    it->second.pop_front();
    if (channel == kPercussionChannel) return;
    if (at == start) {
      out.warnings.push_back("track " + std::to_string(track) + ": zero-length note " + std::to_string(pitch) +
                             " at tick " + std::to_string(start) + " dropped");
      return;
    }
    out.notes.push_back(Note{pitch, Rational(static_cast<std::int64_t>(start), tpq),
                             Rational(static_cast<std::int64_t>(at - start), tpq), false});
  };

  bool ended = false;
  while (!in.done() && !ended) {
    tick += in.varlen();
    std::uint8_t status = in.peek();
    if (status & 0x80u) {
      in.u8();
    } else {
      if (!running) in.malformed("data byte without running status");
      status = running;
    }

    if (status == 0xFF) {
      const std::uint8_t type = in.u8();
      const std::uint32_t len = in.varlen();
      in.skip(len);
      if (type == 0x2F) ended = true;
      continue;
    }
    if (status == 0xF0 || status == 0xF7) {
      running = 0;
      in.skip(in.varlen());
      continue;
    }
    if (status >= 0xF0) in.malformed("unexpected system message in track");

    running = status;
    const int kind = status & 0xF0;
    const int channel = status & 0x0F;
    const int data_bytes = (kind == 0xC0 || kind == 0xD0) ? 1 : 2;
    const std::uint8_t d1 = in.u8();
    const std::uint8_t d2 = data_bytes == 2 ? in.u8() : 0;
    if ((d1 | d2) & 0x80u) in.malformed("data byte with high bit set");

    if (kind == 0x90 && d2 > 0) {
      open[{channel, d1}].push_back(OpenNote{tick});
    } else if (kind == 0x80 || kind == 0x90) {
      close(channel, d1, tick);
    }
  }

  for (auto& [key, queue] : open) {
    while (!queue.empty()) {
      if (key.first != kPercussionChannel) {
        out.warnings.push_back("DanglingNoteOn: track " + std::to_string(track) + ", channel " +
                               std::to_string(key.first + 1) + ", pitch " + std::to_string(key.second) +
                               " closed at end of track");
      }
      close(key.first, key.second, tick);
    }
  }
}

}  // namespace

MidiParseResult parse_midi(std::span<const std::uint8_t> bytes, std::string source_label) {
  MidiParseResult out;
  ByteReader header(bytes, 0, bytes.size());
  if (bytes.size() < 14 || header.be(4) != 0x4D546864u) {  // "MThd"
    throw MidiError(MidiError::Kind::kMalformed, 0, "MalformedMidi: missing MThd header");
  }
  const std::uint32_t header_len = header.be(4);
  if (header_len < 6) header.malformed("header chunk shorter than 6 bytes");
  out.format = static_cast<int>(header.be(2));
  const std::uint32_t track_count = header.be(2);
  const std::uint32_t division = header.be(2);
  if (out.format == 2) {
    throw MidiError(MidiError::Kind::kUnsupportedFormat, 8, "UnsupportedFormat: format 2 MIDI files are not supported");
  }
  if (out.format > 2) header.malformed("unknown MIDI format " + std::to_string(out.format));
  if (division & 0x8000u) {
    throw MidiError(MidiError::Kind::kUnsupportedFormat, 12, "UnsupportedFormat: SMPTE time division");
  }
  if (division == 0) header.malformed("zero ticks per quarter note");
  out.ticks_per_quarter = static_cast<int>(division);
  header.skip(header_len - 6);

  std::size_t pos = header.pos();
  std::uint32_t tracks_seen = 0;
  while (pos + 8 <= bytes.size() && tracks_seen < track_count) {
    ByteReader chunk(bytes, pos, bytes.size());
    const std::uint32_t id = chunk.be(4);
    const std::uint32_t len = chunk.be(4);
    const std::size_t body = chunk.pos();
    if (len > bytes.size() - body) chunk.malformed("chunk length runs past end of file");
    if (id == 0x4D54726Bu) {  // "MTrk"
      ByteReader track(bytes, body, body + len);
      parse_track(track, static_cast<int>(tracks_seen), out.ticks_per_quarter, out);
      ++tracks_seen;
    }
    pos = body + len;
  }
  if (tracks_seen < track_count) {
    throw MidiError(MidiError::Kind::kMalformed, pos,
                    "MalformedMidi: header declares " + std::to_string(track_count) + " tracks, found " +
                        std::to_string(tracks_seen));
  }

  out.fragment = chordify(out.notes, std::move(source_label));
  return out;
}

}  // namespace tma
