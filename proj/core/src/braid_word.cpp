#include "braidkex/braid_word.hpp"

#include <charconv>
#include <cstdlib>

#include "braidkex/errors.hpp"

namespace braidkex {

namespace {

void check_strands(int n) {
    if (n < 2 || n > kMaxStrands) throw DomainError("strand count must be in 2..255");
}

// Stack-based free reduction; adjacent i, -i pairs cancel until stable.
std::vector<std::int32_t> freely_reduce(std::vector<std::int32_t> letters) {
    std::vector<std::int32_t> out;
    out.reserve(letters.size());
    for (std::int32_t s : letters) {
        if (!out.empty() && out.back() == -s)
            out.pop_back();
        else
            out.push_back(s);
    }
    return out;
}

}  // namespace

BraidParams::BraidParams(int strands) : n(strands) { check_strands(strands); }

BraidWord::BraidWord(int n, std::vector<std::int32_t> letters) : n_(n) {
    check_strands(n);
    for (std::int32_t s : letters) {
        const std::int32_t idx = s < 0 ? -s : s;
        if (idx < 1 || idx >= n) throw DomainError("generator index out of range 1..n-1");
    }
    letters_ = freely_reduce(std::move(letters));
}

BraidWord BraidWord::identity(int n) { return BraidWord(n, {}); }

BraidWord parse_word(std::string_view text, int n) {
    check_strands(n);
    std::vector<std::int32_t> letters;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r'))
            ++i;
        if (i >= text.size()) break;
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\n' && text[j] != '\r')
            ++j;
        std::string_view tok = text.substr(i, j - i);
        bool negative = false;
        if (!tok.empty() && tok.front() == '-') {
            negative = true;
            tok.remove_prefix(1);
        }
        if (tok.empty()) throw ParseError("bad token in word");
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError("bad token in word: expected optional '-' then a decimal integer");
        if (value < 1 || value >= n) throw ParseError("generator index out of range 1..n-1");
        letters.push_back(negative ? -value : value);
        i = j;
    }
    return BraidWord(n, std::move(letters));
}

std::string format_word(const BraidWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.letters().size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w.letters()[i]);
    }
    return out;
}

BraidWord multiply(const BraidWord& u, const BraidWord& v) {
    if (u.strands() != v.strands()) throw DomainError("strand-count mismatch");
    std::vector<std::int32_t> letters = u.letters();
    letters.insert(letters.end(), v.letters().begin(), v.letters().end());
    return BraidWord(u.strands(), std::move(letters));
}

BraidWord invert_word(const BraidWord& u) {
    std::vector<std::int32_t> letters(u.letters().rbegin(), u.letters().rend());
    for (auto& s : letters) s = -s;
    return BraidWord(u.strands(), std::move(letters));
}

Permutation permutation_of(const BraidWord& u) {
    const int n = u.strands();
    // img: strand -> current position; occupant: position -> strand.
    std::vector<std::uint8_t> img(static_cast<std::size_t>(n)), occupant(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
        occupant[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    }
    // Left letter acts first: each letter swaps the strands at positions g-1, g.
    for (std::int32_t s : u.letters()) {
        const int g = s < 0 ? -s : s;
        const std::uint8_t a = occupant[static_cast<std::size_t>(g - 1)];
        const std::uint8_t b = occupant[static_cast<std::size_t>(g)];
        img[a] = static_cast<std::uint8_t>(g);
        img[b] = static_cast<std::uint8_t>(g - 1);
        occupant[static_cast<std::size_t>(g - 1)] = b;
        occupant[static_cast<std::size_t>(g)] = a;
    }
    return Permutation(std::move(img));
}

BraidWord delta_word(int n) {
    check_strands(n);
    std::vector<std::int32_t> letters;
    letters.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int row = n - 1; row >= 1; --row)
        for (int g = 1; g <= row; ++g) letters.push_back(g);
    return BraidWord(n, std::move(letters));
}

bool is_pure(const BraidWord& u) { return permutation_of(u).is_identity(); }

}  // namespace braidkex
