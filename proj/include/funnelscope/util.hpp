#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "funnelscope/errors.hpp"

namespace funnelscope {

// Neumaier-compensated accumulator. Sums over providers go through this so
// results do not depend on how partial sums would otherwise be grouped.
class CompensatedSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Shortest decimal representation that round-trips exactly.
inline std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string format_int(long long v) {
    char buf[24];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view text, const std::string& context) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last) {
        throw ValueError(context + ": not a number: '" + std::string(text) + "'");
    }
    return v;
}

inline long long parse_int(std::string_view text, const std::string& context) {
    long long v = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last) {
        throw ValueError(context + ": not an integer: '" + std::string(text) + "'");
    }
    return v;
}

inline std::vector<std::string> split(std::string_view line, char delim) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = line.find(delim, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(line.substr(start));
            break;
        }
        out.emplace_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

// FNV-1a, used for config hashes and input digests in run reports.
class Fnv1a64 {
public:
    void update(std::string_view bytes) {
        for (unsigned char c : bytes) {
            hash_ ^= c;
            hash_ *= 0x100000001b3ull;
        }
    }
    uint64_t digest() const { return hash_; }

    std::string hex() const {
        static const char* digits = "0123456789abcdef";
        std::string out(16, '0');
        uint64_t h = hash_;
        for (int i = 15; i >= 0; --i) {
            out[static_cast<size_t>(i)] = digits[h & 0xf];
            h >>= 4;
        }
        return out;
    }

private:
    uint64_t hash_ = 0xcbf29ce484222325ull;
};

inline std::string fnv1a64_hex(std::string_view bytes) {
    Fnv1a64 h;
    h.update(bytes);
    return h.hex();
}

}  // namespace funnelscope
