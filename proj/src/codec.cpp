#include "ttlab/codec.hpp"

#include "ttlab/error.hpp"

namespace ttlab {

std::string encode(const Digraph & g)
{
    int n = g.order();
    std::string out = "TDG " + std::to_string(n);
    if (n <= 1)
        return out;
    out += ' ';
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            out += static_cast<char>('0' + static_cast<int>(g.state(i, j)));
    return out;
}

Digraph decode(std::string_view text)
{
    constexpr std::string_view space = " \t\r\n";
    std::size_t begin = text.find_first_not_of(space);
    if (begin == std::string_view::npos)
        throw ParseError(0, "empty input");
    std::size_t end = text.find_last_not_of(space) + 1;

    std::size_t pos = begin;
    if (text.substr(pos, 4) != "TDG ")
        throw ParseError(pos, "expected header 'TDG '");
    pos += 4;

    std::size_t digits_begin = pos;
    int n = 0;
    while (pos < end && text[pos] >= '0' && text[pos] <= '9') {
        n = n * 10 + (text[pos] - '0');
        if (n > kMaxVertices)
            throw ParseError(digits_begin, "vertex count exceeds " + std::to_string(kMaxVertices));
        ++pos;
    }
    if (pos == digits_begin)
        throw ParseError(pos, "expected vertex count");
    if (pos - digits_begin > 1 && text[digits_begin] == '0')
        throw ParseError(digits_begin, "vertex count has a leading zero");

    Digraph g(n);
    std::size_t expected = static_cast<std::size_t>(pair_count(n));
    if (n <= 1) {
        if (pos != end)
            throw ParseError(pos, "unexpected trailing characters after vertex count");
        return g;
    }
    if (pos >= end || text[pos] != ' ')
        throw ParseError(pos, "expected a space before the pair states");
    ++pos;

    std::size_t states_begin = pos;
    std::size_t index = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++index) {
            std::size_t at = states_begin + index;
            if (at >= end)
                throw ParseError(at, "expected " + std::to_string(expected) + " pair states, got "
                                         + std::to_string(index));
            char c = text[at];
            if (c < '0' || c > '3')
                throw ParseError(at, std::string("pair state '") + c + "' is not one of 0, 1, 2, 3");
            g.set_state(i, j, static_cast<PairState>(c - '0'));
        }
    }
    if (states_begin + expected != end)
        throw ParseError(states_begin + expected, "expected " + std::to_string(expected)
                                                      + " pair states, got more");
    return g;
}

} // namespace ttlab
