#include "lucasnomial/partitions.hpp"

#include <charconv>

#include "lucasnomial/errors.hpp"

namespace lucasnomial {

bool is_valid(const Partition& lambda) {
    if (lambda.parts.size() != lambda.rows) {
        return false;
    }
    for (std::size_t i = 0; i < lambda.parts.size(); ++i) {
        if (lambda.parts[i] > lambda.cols) {
            return false;
        }
        if (i > 0 && lambda.parts[i] > lambda.parts[i - 1]) {
            return false;
        }
    }
    return true;
}

Partition make_partition(std::vector<unsigned> parts, unsigned rows, unsigned cols) {
    Partition lambda{std::move(parts), rows, cols};
    if (!is_valid(lambda)) {
        throw DomainError(to_text(lambda) + " is not a partition in a " + std::to_string(rows) + "x" +
                          std::to_string(cols) + " rectangle");
    }
    return lambda;
}

namespace {

void fill_parts(unsigned index, unsigned bound, Partition& current, std::vector<Partition>& out) {
    if (index == current.rows) {
        out.push_back(current);
        return;
    }
    // Parts are weakly decreasing, so lexicographic order over the whole list
    // follows from trying each position's values in increasing order.
    for (unsigned v = 0; v <= bound; ++v) {
        current.parts[index] = v;
        fill_parts(index + 1, v, current, out);
    }
}

}  // namespace

std::vector<Partition> enumerate_in_rect(unsigned rows, unsigned cols) {
    std::vector<Partition> out;
    Partition current{std::vector<unsigned>(rows, 0), rows, cols};
    fill_parts(0, cols, current, out);
    return out;
}

Partition complement(const Partition& lambda) {
    Partition out{std::vector<unsigned>(lambda.cols, 0), lambda.cols, lambda.rows};
    for (unsigned j = 1; j <= lambda.cols; ++j) {
        unsigned covered = 0;
        for (unsigned part : lambda.parts) {
            covered += part >= lambda.cols + 1 - j ? 1U : 0U;
        }
        out.parts[j - 1] = lambda.rows - covered;
    }
    return out;
}

unsigned size(const Partition& lambda) {
    unsigned total = 0;
    for (unsigned part : lambda.parts) {
        total += part;
    }
    return total;
}

std::string to_text(const Partition& lambda) {
    std::string out = "[";
    for (std::size_t i = 0; i < lambda.parts.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += std::to_string(lambda.parts[i]);
    }
    return out + "]";
}

Partition parse_partition(std::string_view text, unsigned rows, unsigned cols) {
    auto fail = [&] { throw ParseError("bad partition text \"" + std::string(text) + "\""); };
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        fail();
    }
    std::vector<unsigned> parts;
    std::string_view body = text.substr(1, text.size() - 2);
    while (!body.empty()) {
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
        if (ec != std::errc{}) {
            fail();
        }
        parts.push_back(value);
        body.remove_prefix(static_cast<std::size_t>(ptr - body.data()));
        if (!body.empty()) {
            if (body.front() != ',' || body.size() == 1) {
                fail();
            }
            body.remove_prefix(1);
        }
    }
    return make_partition(std::move(parts), rows, cols);
}

}  // namespace lucasnomial
