#include "fmzv/index.hpp"

#include <cctype>

#include "fmzv/errors.hpp"

namespace fmzv {

IndexInfo classify(const Index& k) {
    IndexInfo info;
    info.depth = k.size();
    info.is_positive = true;
    for (const auto e : k) {
        if (e >= 1) {
            ++info.positive_count;
            info.positive_sum += e;
        } else {
            info.is_positive = false;
        }
    }
    if (info.is_positive) info.weight = info.positive_sum;
    info.is_admissible = info.is_positive && (k.empty() || k.back() >= 2);
    return info;
}

Index parse_index(const std::string& text) {
    Index out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::size_t end = comma == std::string::npos ? text.size() : comma;
        std::size_t lo = pos, hi = end;
        while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
        while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
        if (lo == hi) throw ParseError("empty index entry", pos);
        std::size_t cur = lo;
        bool negative = false;
        if (text[cur] == '-' || text[cur] == '+') {
            negative = text[cur] == '-';
            ++cur;
        }
        if (cur == hi) throw ParseError("sign without digits", lo);
        std::int64_t value = 0;
        for (; cur < hi; ++cur) {
            if (!std::isdigit(static_cast<unsigned char>(text[cur])))
                throw ParseError(std::string("unexpected character '") + text[cur] + "' in index entry", cur);
            value = value * 10 + (text[cur] - '0');
            if (value > (1LL << 40)) throw ParseError("index entry out of range", lo);
        }
        out.push_back(negative ? -value : value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == text.size()) throw ParseError("trailing comma", comma);
    }
    return out;
}

std::string format_index(const Index& k) {
    std::string out;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(k[i]);
    }
    return out;
}

} // namespace fmzv
