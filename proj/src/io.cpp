#include "hydroprim/io.hpp"

#include <bit>
#include <charconv>
#include <cstring>
#include <filesystem>
#include <fstream>

namespace hydroprim {

static_assert(std::endian::native == std::endian::little,
              "snapshot format assumes a little-endian host");

namespace {

constexpr char kMagic[4] = {'P', 'E', 'Q', '1'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void put(std::ofstream& out, const T& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::ifstream& in, const char* what) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw IoError(std::string("snapshot: truncated file reading ") + what);
    return v;
}

}  // namespace

void write_snapshot(const State& state, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("snapshot: cannot open " + path + " for writing");
    const GridSpec& g = state.grid();
    out.write(kMagic, 4);
    put(out, kVersion);
    put(out, static_cast<std::uint32_t>(g.nx));
    put(out, static_cast<std::uint32_t>(g.ny));
    put(out, static_cast<std::uint32_t>(g.nz));
    put(out, g.lx);
    put(out, g.ly);
    put(out, g.h);
    put(out, state.time);
    put(out, static_cast<std::uint32_t>(2));
    for (const SpectralField* f : {&state.u, &state.v}) {
        put(out, static_cast<std::uint8_t>(f->parity() == Parity::CosZ ? 0 : 1));
        out.write(reinterpret_cast<const char*>(f->data().data()),
                  static_cast<std::streamsize>(sizeof(cplx) * f->data().size()));
    }
    if (!out) throw IoError("snapshot: write failed for " + path);
}

SnapshotInfo snapshot_info(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("snapshot: cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw IoError("snapshot: bad magic in " + path);
    SnapshotInfo info;
    info.version = get<std::uint32_t>(in, "version");
    if (info.version != kVersion)
        throw IoError("snapshot: unsupported version " + std::to_string(info.version));
    info.nx = get<std::uint32_t>(in, "nx");
    info.ny = get<std::uint32_t>(in, "ny");
    info.nz = get<std::uint32_t>(in, "nz");
    info.lx = get<double>(in, "lx");
    info.ly = get<double>(in, "ly");
    info.h = get<double>(in, "h");
    info.time = get<double>(in, "time");
    info.field_count = get<std::uint32_t>(in, "field_count");
    return info;
}

State read_snapshot(const std::string& path, const GridSpec* expect) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("snapshot: cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw IoError("snapshot: bad magic in " + path);
    const auto version = get<std::uint32_t>(in, "version");
    if (version != kVersion)
        throw IoError("snapshot: unsupported version " + std::to_string(version));
    const auto nx = get<std::uint32_t>(in, "nx");
    const auto ny = get<std::uint32_t>(in, "ny");
    const auto nz = get<std::uint32_t>(in, "nz");
    const double lx = get<double>(in, "lx");
    const double ly = get<double>(in, "ly");
    const double h = get<double>(in, "h");
    const double time = get<double>(in, "time");
    const auto field_count = get<std::uint32_t>(in, "field_count");
    if (field_count != 2)
        throw IoError("snapshot: expected 2 fields, found " + std::to_string(field_count));

    GridSpec grid(lx, ly, h, static_cast<int>(nx), static_cast<int>(ny), static_cast<int>(nz));
    if (expect && !(grid == *expect))
        throw IoError("snapshot: grid mismatch on restart (" + path + ")");

    State state(grid, time);
    for (SpectralField* f : {&state.u, &state.v}) {
        const auto parity = get<std::uint8_t>(in, "parity");
        if (parity != 0) throw IoError("snapshot: state fields must have CosZ parity");
        in.read(reinterpret_cast<char*>(f->data().data()),
                static_cast<std::streamsize>(sizeof(cplx) * f->data().size()));
        if (!in) throw IoError("snapshot: truncated coefficient block in " + path);
    }
    return state;
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(const std::string& path, bool force) : path_(path) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (fs::exists(path_, ec) && fs::file_size(path_, ec) > 0) {
        if (!force)
            throw IoError("csv: " + path_ + " exists; pass --force to overwrite");
        std::ofstream trunc(path_, std::ios::trunc);
    }
}

void CsvWriter::append(const DiagnosticsRecord& rec) {
    std::ofstream out(path_, std::ios::app);
    if (!out) throw IoError("csv: cannot open " + path_);
    if (!header_written_) {
        namespace fs = std::filesystem;
        std::error_code ec;
        if (!fs::exists(path_, ec) || fs::file_size(path_, ec) == 0) {
            const auto& cols = DiagnosticsRecord::column_names();
            for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
            out << "\n";
        }
        header_written_ = true;
    }
    const std::vector<double> vals = rec.values();
    for (std::size_t i = 0; i < vals.size(); ++i) out << (i ? "," : "") << format_double(vals[i]);
    out << "\n";
    if (!out) throw IoError("csv: write failed for " + path_);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("io: cannot open " + path + " for writing");
    out << content;
    if (!out) throw IoError("io: write failed for " + path);
}

}  // namespace hydroprim
