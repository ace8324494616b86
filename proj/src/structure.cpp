#include "catcomp/structure.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace catcomp {

namespace {

// One element of the structural-equivalence group: relabel dimensions by
// perm (output dimension j reads input dimension perm[j]) after flipping
// the dimensions marked in flips.
struct Transform {
    std::array<int, kMaxDims> perm;
    Stimulus flips;
};

Stimulus apply(const Transform& t, Stimulus x, int dims) {
    const Stimulus fx = x ^ t.flips;
    Stimulus y = 0;
    for (int j = 0; j < dims; ++j) {
        const int bit = (fx >> (dims - 1 - t.perm[j])) & 1;
        y = static_cast<Stimulus>(y | (bit << (dims - 1 - j)));
    }
    return y;
}

std::vector<Stimulus> image(const Transform& t, const std::vector<Stimulus>& a,
                            int dims) {
    std::vector<Stimulus> out;
    out.reserve(a.size());
    for (Stimulus x : a)
        out.push_back(apply(t, x, dims));
    std::sort(out.begin(), out.end());
    return out;
}

// Calls fn with every (perm, flips) pair; fn may return false to stop early.
template <typename Fn>
void for_each_transform(int dims, Fn&& fn) {
    Transform t{};
    std::iota(t.perm.begin(), t.perm.begin() + dims, 0);
    do {
        const Stimulus flip_end = static_cast<Stimulus>(1u << dims);
        for (t.flips = 0; t.flips < flip_end; ++t.flips)
            fn(t);
    } while (std::next_permutation(t.perm.begin(), t.perm.begin() + dims));
}

std::vector<Stimulus> complement_set(const std::vector<Stimulus>& a, int dims) {
    std::vector<Stimulus> out;
    out.reserve((1u << dims) - a.size());
    auto it = a.begin();
    for (Stimulus x = 0; x < (1u << dims); ++x) {
        if (it != a.end() && *it == x)
            ++it;
        else
            out.push_back(x);
    }
    return out;
}

} // namespace

CategoryStructure::CategoryStructure(int dims, std::vector<Stimulus> a_set)
    : dims_(dims), a_set_(std::move(a_set)) {
    if (dims_ < 1 || dims_ > kMaxDims)
        throw RangeError("dimension count " + std::to_string(dims_) +
                         " is outside [1, " + std::to_string(kMaxDims) + "]");
    const Stimulus space = static_cast<Stimulus>(1u << dims_);
    for (Stimulus x : a_set_)
        if (x >= space)
            throw RangeError("stimulus " + std::to_string(x) +
                             " is outside the " + std::to_string(space) +
                             "-element space");
    if (a_set_.empty())
        throw ParseError("category A is empty");
    std::sort(a_set_.begin(), a_set_.end());
    if (std::adjacent_find(a_set_.begin(), a_set_.end()) != a_set_.end())
        throw ParseError("category A lists a stimulus twice");
    if (a_set_.size() == space)
        throw ParseError("category A covers the whole stimulus space");
    for (Stimulus x : a_set_)
        mask_[x >> 6] |= std::uint64_t{1} << (x & 63);
}

bool CategoryStructure::operator<(const CategoryStructure& o) const {
    if (dims_ != o.dims_)
        return dims_ < o.dims_;
    return a_set_ < o.a_set_;
}

namespace {

std::vector<std::string> split_tokens(const std::string& text) {
    std::vector<std::string> tokens;
    std::string current;
    bool any_separator = false;
    for (char c : text) {
        if (c == '{' || c == '}' || std::isspace(static_cast<unsigned char>(c)))
            continue;
        if (c == ',' || c == '|') {
            tokens.push_back(current);
            current.clear();
            any_separator = true;
            continue;
        }
        current.push_back(c);
    }
    if (any_separator || !current.empty())
        tokens.push_back(current);
    return tokens;
}

Stimulus token_to_stimulus(const std::string& token, int dims, size_t index) {
    if (token.empty())
        throw ParseError("token " + std::to_string(index) + " is empty");
    if (static_cast<int>(token.size()) != dims)
        throw ParseError("token " + std::to_string(index) + " (\"" + token +
                         "\") has " + std::to_string(token.size()) +
                         " digits, expected " + std::to_string(dims));
    Stimulus value = 0;
    for (char c : token) {
        if (c != '0' && c != '1')
            throw ParseError("token " + std::to_string(index) + " (\"" + token +
                             "\") contains a non-binary digit");
        value = static_cast<Stimulus>((value << 1) | (c == '1'));
    }
    return value;
}

CategoryStructure parse_with_dims(const std::vector<std::string>& tokens,
                                  int dims) {
    std::vector<Stimulus> a;
    a.reserve(tokens.size());
    for (size_t i = 0; i < tokens.size(); ++i) {
        const Stimulus x = token_to_stimulus(tokens[i], dims, i + 1);
        if (std::find(a.begin(), a.end(), x) != a.end())
            throw ParseError("token " + std::to_string(i + 1) + " (\"" +
                             tokens[i] + "\") repeats an earlier stimulus");
        a.push_back(x);
    }
    return CategoryStructure(dims, std::move(a));
}

} // namespace

CategoryStructure parse_structure(const std::string& text, int dims) {
    if (dims < 1 || dims > kMaxDims)
        throw RangeError("dimension count " + std::to_string(dims) +
                         " is outside [1, " + std::to_string(kMaxDims) + "]");
    return parse_with_dims(split_tokens(text), dims);
}

CategoryStructure parse_structure(const std::string& text) {
    const auto tokens = split_tokens(text);
    if (tokens.empty())
        throw ParseError("no stimuli listed");
    if (tokens[0].empty())
        throw ParseError("token 1 is empty");
    return parse_with_dims(tokens, static_cast<int>(tokens[0].size()));
}

std::string format_stimulus(Stimulus s, int dims) {
    std::string out(dims, '0');
    for (int j = 0; j < dims; ++j)
        if ((s >> (dims - 1 - j)) & 1)
            out[j] = '1';
    return out;
}

std::string format_structure(const CategoryStructure& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.a_set().size(); ++i) {
        if (i > 0)
            out += ',';
        out += format_stimulus(s.a_set()[i], s.dims());
    }
    out += '}';
    return out;
}

CategoryStructure complement(const CategoryStructure& s) {
    return CategoryStructure(s.dims(), complement_set(s.a_set(), s.dims()));
}

std::vector<CategoryStructure> symmetry_orbit(const CategoryStructure& s) {
    const int d = s.dims();
    const bool with_complement = 2 * s.a_size() == s.space_size();
    std::set<std::vector<Stimulus>> seen;
    std::vector<std::vector<Stimulus>> bases{s.a_set()};
    if (with_complement)
        bases.push_back(complement_set(s.a_set(), d));
    for (const auto& base : bases)
        for_each_transform(d, [&](const Transform& t) {
            seen.insert(image(t, base, d));
        });
    std::vector<CategoryStructure> orbit;
    orbit.reserve(seen.size());
    for (const auto& member : seen)
        orbit.emplace_back(d, member);
    return orbit;
}

CategoryStructure canonical_form(const CategoryStructure& s) {
    const int d = s.dims();
    std::vector<std::vector<Stimulus>> bases;
    if (2 * s.a_size() > s.space_size()) {
        bases.push_back(complement_set(s.a_set(), d));
    } else {
        bases.push_back(s.a_set());
        if (2 * s.a_size() == s.space_size())
            bases.push_back(complement_set(s.a_set(), d));
    }
    std::vector<Stimulus> best;
    for (const auto& base : bases)
        for_each_transform(d, [&](const Transform& t) {
            auto candidate = image(t, base, d);
            if (best.empty() || candidate < best)
                best = std::move(candidate);
        });
    return CategoryStructure(d, std::move(best));
}

std::vector<CategoryStructure> enumerate_classes(int dims, int p) {
    if (dims < 1 || dims > kMaxDims)
        throw RangeError("dimension count " + std::to_string(dims) +
                         " is outside [1, " + std::to_string(kMaxDims) + "]");
    const int space = 1 << dims;
    if (p < 1 || 2 * p > space)
        throw RangeError("category size " + std::to_string(p) +
                         " is outside [1, " + std::to_string(space / 2) + "]");

    std::vector<CategoryStructure> classes;
    std::vector<Stimulus> pick(p);
    std::iota(pick.begin(), pick.end(), Stimulus{0});
    while (true) {
        CategoryStructure candidate(dims, pick);
        if (canonical_form(candidate) == candidate)
            classes.push_back(std::move(candidate));
        // advance to the next ascending p-combination of the space
        int i = p - 1;
        while (i >= 0 && pick[i] == space - p + i)
            --i;
        if (i < 0)
            break;
        ++pick[i];
        for (int j = i + 1; j < p; ++j)
            pick[j] = static_cast<Stimulus>(pick[j - 1] + 1);
    }
    return classes;
}

std::uint64_t symmetry_group_order(int dims, bool with_complement) {
    std::uint64_t order = 1;
    for (int i = 2; i <= dims; ++i)
        order *= static_cast<std::uint64_t>(i);
    order <<= dims;
    return with_complement ? order * 2 : order;
}

} // namespace catcomp
