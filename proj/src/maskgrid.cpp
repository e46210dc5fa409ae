// SPDX-License-Identifier: Apache-2.0
#include "curvetext/maskgrid.hpp"

#include <charconv>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "curvetext/errors.hpp"

namespace curvetext {

ScoreGrid::ScoreGrid(int w, int h, double stride_pixels, std::vector<float> vals)
    : width(w), height(h), stride(stride_pixels), values(std::move(vals)) {
    if (w <= 0 || h <= 0) throw std::invalid_argument("ScoreGrid: non-positive dimensions");
    if (stride <= 0.0) throw std::invalid_argument("ScoreGrid: stride must be positive");
    size_t n = static_cast<size_t>(w) * static_cast<size_t>(h);
    if (values.empty()) values.assign(n, 0.0f);
    if (values.size() != n) throw std::invalid_argument("ScoreGrid: value count mismatch");
    for (float v : values) {
        if (!(v >= 0.0f && v <= 1.0f))
            throw std::invalid_argument("ScoreGrid: values must lie in [0,1]");
    }
}

BitGrid::BitGrid(int w, int h, double stride_pixels) : width(w), height(h), stride(stride_pixels) {
    if (w <= 0 || h <= 0) throw std::invalid_argument("BitGrid: non-positive dimensions");
    if (stride <= 0.0) throw std::invalid_argument("BitGrid: stride must be positive");
    bits.assign(static_cast<size_t>(w) * static_cast<size_t>(h), 0);
}

double SegmentScores::mean_score() const {
    if (scores.empty()) return 0.0;
    double sum = 0.0;
    for (float s : scores) sum += s;
    return sum / static_cast<double>(scores.size());
}

bool SegmentMask::sample(Point p) const {
    if (resolution <= 0 || side <= 0.0) return false;
    double u = (p.x - origin.x) / side * resolution;
    double v = (p.y - origin.y) / side * resolution;
    if (u < 0.0 || v < 0.0 || u >= resolution || v >= resolution) return false;
    int iu = static_cast<int>(u);
    int iv = static_cast<int>(v);
    return bits[static_cast<size_t>(iv) * resolution + iu] != 0;
}

BitGrid binarize(const ScoreGrid& g, double s1) {
    if (s1 < 0.0 || s1 > 1.0) throw std::invalid_argument("binarize: s1 must lie in [0,1]");
    BitGrid out(g.width, g.height, g.stride);
    for (size_t i = 0; i < g.values.size(); ++i) out.bits[i] = g.values[i] > s1 ? 1 : 0;
    return out;
}

SegmentMask binarize(const SegmentScores& m, double s1) {
    if (s1 < 0.0 || s1 > 1.0) throw std::invalid_argument("binarize: s1 must lie in [0,1]");
    SegmentMask out;
    out.origin = m.origin();
    out.side = m.side;
    out.resolution = m.resolution;
    out.bits.resize(m.scores.size());
    for (size_t i = 0; i < m.scores.size(); ++i) out.bits[i] = m.scores[i] > s1 ? 1 : 0;
    return out;
}

bool binarizes_empty(const SegmentScores& m, double s1) {
    for (float s : m.scores) {
        if (s > s1) return false;
    }
    return true;
}

BitGrid paste(BitGrid canvas, const SegmentMask& m) {
    if (m.resolution <= 0 || m.side <= 0.0) return canvas;
    double s = canvas.stride;
    int ix0 = std::max(0, static_cast<int>(std::floor(m.origin.x / s - 0.5)));
    int iy0 = std::max(0, static_cast<int>(std::floor(m.origin.y / s - 0.5)));
    int ix1 = std::min(canvas.width - 1, static_cast<int>(std::ceil((m.origin.x + m.side) / s)));
    int iy1 = std::min(canvas.height - 1, static_cast<int>(std::ceil((m.origin.y + m.side) / s)));
    for (int iy = iy0; iy <= iy1; ++iy) {
        for (int ix = ix0; ix <= ix1; ++ix) {
            if (m.sample(canvas.cell_center(ix, iy))) canvas.at(ix, iy) = 1;
        }
    }
    return canvas;
}

long mask_area(const BitGrid& g) {
    long n = 0;
    for (uint8_t b : g.bits) n += b ? 1 : 0;
    return n;
}

double overlap_ratio_min(const BitGrid& a, const BitGrid& b) {
    if (a.width != b.width || a.height != b.height || a.stride != b.stride)
        throw std::invalid_argument("overlap_ratio_min: grid shape mismatch");
    long area_a = 0, area_b = 0, inter = 0;
    for (size_t i = 0; i < a.bits.size(); ++i) {
        bool ba = a.bits[i] != 0;
        bool bb = b.bits[i] != 0;
        area_a += ba;
        area_b += bb;
        inter += ba && bb;
    }
    if (area_a == 0 || area_b == 0) return 0.0;
    return static_cast<double>(inter) / static_cast<double>(std::min(area_a, area_b));
}

namespace {

void append_float(std::string& out, float v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
}

void append_double(std::string& out, double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
}

float parse_float_token(const std::string& tok, size_t line_no) {
    float v = 0.0f;
    const char* b = tok.data();
    const char* e = tok.data() + tok.size();
    auto res = std::from_chars(b, e, v);
    if (res.ec != std::errc() || res.ptr != e)
        throw ParseError("bad float token '" + tok + "'", line_no);
    return v;
}

void put_u32le(std::ostream& out, uint32_t v) {
    char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                 static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
    out.write(b, 4);
}

void put_f32le(std::ostream& out, float v) {
    uint32_t u;
    std::memcpy(&u, &v, 4);
    put_u32le(out, u);
}

uint32_t get_u32le(std::istream& in, size_t& off) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    if (in.gcount() != 4) throw ParseError("truncated field", 0, off);
    off += 4;
    return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
           (static_cast<uint32_t>(b[2]) << 16) | (static_cast<uint32_t>(b[3]) << 24);
}

float get_f32le(std::istream& in, size_t& off) {
    uint32_t u = get_u32le(in, off);
    float v;
    std::memcpy(&v, &u, 4);
    return v;
}

}  // namespace

void write_score_grid_text(std::ostream& out, const ScoreGrid& g) {
    std::string line = "SCOREGRID ";
    line += std::to_string(g.width);
    line += ' ';
    line += std::to_string(g.height);
    line += ' ';
    append_double(line, g.stride);
    line += '\n';
    out << line;
    for (int iy = 0; iy < g.height; ++iy) {
        line.clear();
        for (int ix = 0; ix < g.width; ++ix) {
            if (ix) line += ' ';
            append_float(line, g.at(ix, iy));
        }
        line += '\n';
        out << line;
    }
}

ScoreGrid read_score_grid_text(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw ParseError("missing SCOREGRID header", 1);
    std::istringstream hs(header);
    std::string magic;
    int w = 0, h = 0;
    double stride = 0.0;
    if (!(hs >> magic >> w >> h >> stride) || magic != "SCOREGRID")
        throw ParseError("malformed SCOREGRID header", 1);
    if (w <= 0 || h <= 0 || stride <= 0.0) throw ParseError("bad SCOREGRID dimensions", 1);
    std::vector<float> vals;
    vals.reserve(static_cast<size_t>(w) * h);
    std::string line, tok;
    for (int iy = 0; iy < h; ++iy) {
        if (!std::getline(in, line)) throw ParseError("missing grid row", static_cast<size_t>(iy) + 2);
        std::istringstream ls(line);
        int count = 0;
        while (ls >> tok) {
            vals.push_back(parse_float_token(tok, static_cast<size_t>(iy) + 2));
            ++count;
        }
        if (count != w)
            throw ParseError("expected " + std::to_string(w) + " values, got " + std::to_string(count),
                             static_cast<size_t>(iy) + 2);
    }
    try {
        return ScoreGrid(w, h, stride, std::move(vals));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 1);
    }
}

void write_score_grid_binary(std::ostream& out, const ScoreGrid& g) {
    out.write("SGRD", 4);
    put_u32le(out, static_cast<uint32_t>(g.width));
    put_u32le(out, static_cast<uint32_t>(g.height));
    put_f32le(out, static_cast<float>(g.stride));
    for (float v : g.values) put_f32le(out, v);
}

ScoreGrid read_score_grid_binary(std::istream& in) {
    size_t off = 0;
    char magic[4];
    in.read(magic, 4);
    if (in.gcount() != 4 || std::memcmp(magic, "SGRD", 4) != 0)
        throw ParseError("missing SGRD magic", 0, off);
    off += 4;
    uint32_t w = get_u32le(in, off);
    uint32_t h = get_u32le(in, off);
    float stride = get_f32le(in, off);
    if (w == 0 || h == 0 || w > (1u << 20) || h > (1u << 20))
        throw ParseError("bad SGRD dimensions", 0, off);
    std::vector<float> vals(static_cast<size_t>(w) * h);
    for (auto& v : vals) v = get_f32le(in, off);
    try {
        return ScoreGrid(static_cast<int>(w), static_cast<int>(h), stride, std::move(vals));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0, off);
    }
}

}  // namespace curvetext
