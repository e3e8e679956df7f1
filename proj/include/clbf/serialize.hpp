#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clbf {

/// Little-endian byte sink for filter/model file formats.
/// All multi-byte values are written byte by byte so the wire format is
/// identical regardless of host endianness.
class ByteWriter {
public:
    void u8(uint8_t v) { buf_.push_back(v); }

    void u16(uint16_t v) {
        for (int i = 0; i < 2; ++i) buf_.push_back(uint8_t(v >> (8 * i)));
    }

    void u32(uint32_t v) {
        for (int i = 0; i < 4; ++i) buf_.push_back(uint8_t(v >> (8 * i)));
    }

    void u64(uint64_t v) {
        for (int i = 0; i < 8; ++i) buf_.push_back(uint8_t(v >> (8 * i)));
    }

    void f32(float v) {
        uint32_t bits;
        std::memcpy(&bits, &v, 4);
        u32(bits);
    }

    void f64(double v) {
        uint64_t bits;
        std::memcpy(&bits, &v, 8);
        u64(bits);
    }

    /// Length-prefixed byte string.
    void bytes(std::string_view s) {
        u64(s.size());
        buf_.insert(buf_.end(), s.begin(), s.end());
    }

    void raw(const void* data, size_t len) {
        const uint8_t* p = static_cast<const uint8_t*>(data);
        buf_.insert(buf_.end(), p, p + len);
    }

    const std::vector<uint8_t>& data() const { return buf_; }

    void to_file(const std::string& path) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open for writing: " + path);
        out.write(reinterpret_cast<const char*>(buf_.data()),
                  static_cast<std::streamsize>(buf_.size()));
        if (!out) throw std::runtime_error("write failed: " + path);
    }

private:
    std::vector<uint8_t> buf_;
};

/// Matching reader; throws on truncated input.
class ByteReader {
public:
    explicit ByteReader(std::vector<uint8_t> data) : buf_(std::move(data)) {}

    static ByteReader from_file(const std::string& path) {
        std::ifstream in(path, std::ios::binary | std::ios::ate);
        if (!in) throw std::runtime_error("cannot open for reading: " + path);
        std::streamsize size = in.tellg();
        in.seekg(0);
        std::vector<uint8_t> data(static_cast<size_t>(size));
        in.read(reinterpret_cast<char*>(data.data()), size);
        if (!in) throw std::runtime_error("read failed: " + path);
        return ByteReader(std::move(data));
    }

    uint8_t u8() { return take(1)[0]; }

    uint16_t u16() {
        const uint8_t* p = take(2);
        return uint16_t(p[0]) | uint16_t(p[1]) << 8;
    }

    uint32_t u32() {
        const uint8_t* p = take(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= uint32_t(p[i]) << (8 * i);
        return v;
    }

    uint64_t u64() {
        const uint8_t* p = take(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= uint64_t(p[i]) << (8 * i);
        return v;
    }

    float f32() {
        uint32_t bits = u32();
        float v;
        std::memcpy(&v, &bits, 4);
        return v;
    }

    double f64() {
        uint64_t bits = u64();
        double v;
        std::memcpy(&v, &bits, 8);
        return v;
    }

    std::string bytes() {
        uint64_t n = u64();
        const uint8_t* p = take(n);
        return std::string(reinterpret_cast<const char*>(p), n);
    }

    const uint8_t* take(uint64_t n) {
        if (pos_ + n > buf_.size()) throw std::runtime_error("truncated input");
        const uint8_t* p = buf_.data() + pos_;
        pos_ += n;
        return p;
    }

    bool exhausted() const { return pos_ == buf_.size(); }

private:
    std::vector<uint8_t> buf_;
    size_t pos_ = 0;
};

}  // namespace clbf
