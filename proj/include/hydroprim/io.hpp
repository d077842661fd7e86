#pragma once

#include <string>

#include "hydroprim/diagnostics.hpp"
#include "hydroprim/fields.hpp"

namespace hydroprim {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SnapshotInfo {
    std::uint32_t version = 0;
    std::uint32_t nx = 0, ny = 0, nz = 0;
    double lx = 0.0, ly = 0.0, h = 0.0;
    double time = 0.0;
    std::uint32_t field_count = 0;
};

// Binary snapshot, little-endian: magic "PEQ1"; u32 version = 1; u32 nx, ny,
// nz; f64 lx, ly, h; f64 time; u32 field_count = 2; per field: u8 parity
// (0 = CosZ, 1 = SinZ) then nx*ny*nz (f64 re, f64 im) pairs, n outermost, then
// m2, then m1 innermost, FFT frequency ordering.  Round trips bit-exactly.
void write_snapshot(const State& state, const std::string& path);
State read_snapshot(const std::string& path, const GridSpec* expect = nullptr);
SnapshotInfo snapshot_info(const std::string& path);

// Shortest round-trip decimal representation.
std::string format_double(double v);

// Diagnostics CSV: header once, one row per record, declaration order,
// deterministic bytes.  Refuses an existing non-empty file unless force.
class CsvWriter {
  public:
    CsvWriter(const std::string& path, bool force = false);
    void append(const DiagnosticsRecord& rec);
    const std::string& path() const { return path_; }

  private:
    std::string path_;
    bool header_written_ = false;
};

void write_text_file(const std::string& path, const std::string& content);

}  // namespace hydroprim
