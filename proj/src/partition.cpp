#include "partita/partition.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace partita {

Partition Partition::canonicalize(std::vector<std::int64_t> raw) {
    for (std::int64_t x : raw) {
        if (x <= 0) {
            throw std::invalid_argument("partition parts must be positive, got " +
                                        std::to_string(x));
        }
    }
    std::sort(raw.begin(), raw.end(), std::greater<>());
    Partition p;
    p.weight_ = std::accumulate(raw.begin(), raw.end(), std::int64_t{0});
    p.parts_ = std::move(raw);
    return p;
}

Partition Partition::from_sorted(std::vector<std::int64_t> parts) {
    Partition p;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        assert(parts[i] > 0);
        assert(i == 0 || parts[i - 1] >= parts[i]);
        p.weight_ += parts[i];
    }
    p.parts_ = std::move(parts);
    return p;
}

std::vector<Partition::MultEntry> Partition::multiplicities() const {
    std::vector<MultEntry> view;
    for (std::size_t i = 0; i < parts_.size();) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        view.push_back({parts_[i], static_cast<std::int64_t>(j - i)});
        i = j;
    }
    return view;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<std::int64_t> conj(static_cast<std::size_t>(parts_.front()), 0);
    // conj[j-1] = #{i : lambda_i >= j}
    for (std::int64_t x : parts_) {
        for (std::int64_t j = 0; j < x; ++j) ++conj[static_cast<std::size_t>(j)];
    }
    return from_sorted(std::move(conj));
}

std::int64_t Partition::order() const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] >= static_cast<std::int64_t>(i) + 1) s = static_cast<std::int64_t>(i) + 1;
        else break;
    }
    return s;
}

std::int64_t Partition::distinct_even_part_count() const {
    std::int64_t count = 0;
    for (const auto& [size, mult] : multiplicities()) {
        (void)mult;
        if (size % 2 == 0) ++count;
    }
    return count;
}

std::string Partition::str(bool exponent_form) const {
    std::string out;
    if (!exponent_form) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }
    auto view = multiplicities();
    for (std::size_t i = 0; i < view.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(view[i].size);
        if (view[i].multiplicity > 1) {
            out += '^';
            out += std::to_string(view[i].multiplicity);
        }
    }
    return out;
}

Partition expand(const MultiplicityView& view) {
    std::vector<std::int64_t> parts;
    for (const auto& [size, mult] : view) {
        if (size <= 0 || mult <= 0) {
            throw std::invalid_argument("multiplicity view entries must be positive");
        }
        parts.insert(parts.end(), static_cast<std::size_t>(mult), size);
    }
    return Partition::canonicalize(std::move(parts));
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::int64_t parse_number(std::string_view tok, std::string_view whole) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw std::invalid_argument("bad partition token '" + std::string(whole) +
                                    "': '" + std::string(tok) + "' is not a number");
    }
    return value;
}

} // namespace

Partition parse_partition(std::string_view text) {
    text = trim(text);
    if (text.empty()) return {};
    std::vector<std::int64_t> parts;
    std::int64_t prev_size = 0;
    std::size_t pos = 0;
    bool first = true;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = trim(text.substr(pos, comma - pos));
        if (tok.empty()) {
            throw std::invalid_argument("bad partition token '': empty entry in \"" +
                                        std::string(text) + "\"");
        }
        std::string_view size_part = tok;
        std::int64_t mult = 1;
        if (std::size_t caret = tok.find('^'); caret != std::string_view::npos) {
            size_part = trim(tok.substr(0, caret));
            mult = parse_number(trim(tok.substr(caret + 1)), tok);
            if (mult < 1) {
                throw std::invalid_argument("bad partition token '" + std::string(tok) +
                                            "': multiplicity must be >= 1");
            }
        }
        std::int64_t size = parse_number(size_part, tok);
        if (size < 1) {
            throw std::invalid_argument("bad partition token '" + std::string(tok) +
                                        "': parts must be >= 1");
        }
        if (!first && size > prev_size) {
            throw std::invalid_argument("bad partition token '" + std::string(tok) +
                                        "': parts must be weakly decreasing");
        }
        parts.insert(parts.end(), static_cast<std::size_t>(mult), size);
        prev_size = size;
        first = false;
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return Partition::canonicalize(std::move(parts));
}

} // namespace partita
