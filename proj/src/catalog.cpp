#include "catcomp/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <map>
#include <mutex>

namespace catcomp {

namespace {

struct RowSpec {
    int dims;
    int p;
    const char* alias;
    const char* a;
};

// The traditional listing, block-major. Row order inside a block is pinned
// data, not derived from the enumeration order.
const RowSpec kRows[] = {
    {2, 1, "", "00"},
    {2, 2, "", "00,01"},
    {2, 2, "", "00,11"},
    {3, 1, "", "000"},
    {3, 2, "", "000,001"},
    {3, 2, "", "000,011"},
    {3, 2, "", "000,111"},
    {3, 3, "", "000,001,010"},
    {3, 3, "", "000,001,110"},
    {3, 3, "", "000,011,101"},
    {3, 4, "I", "000,001,010,011"},
    {3, 4, "II", "000,001,110,111"},
    {3, 4, "III", "000,001,010,101"},
    {3, 4, "IV", "000,001,010,100"},
    {3, 4, "V", "000,001,010,111"},
    {3, 4, "VI", "000,011,101,110"},
    {4, 1, "", "0000"},
    {4, 2, "", "0000,0001"},
    {4, 2, "", "0000,0011"},
    {4, 2, "", "0000,0111"},
    {4, 2, "", "0000,1111"},
    {4, 3, "", "0000,0001,0010"},
    {4, 3, "", "0000,0001,0110"},
    {4, 3, "", "0000,0001,1110"},
    {4, 3, "", "0000,0011,0101"},
    {4, 3, "", "0000,0011,1100"},
    {4, 3, "", "0000,0011,1101"},
    {4, 4, "", "0000,0001,0010,0011"},
    {4, 4, "", "0000,0001,0010,0100"},
    {4, 4, "", "0000,0001,0010,0101"},
    {4, 4, "", "0000,0001,0010,0111"},
    {4, 4, "", "0000,0001,0010,1100"},
    {4, 4, "", "0000,0001,0010,1101"},
    {4, 4, "", "0000,0001,0010,1111"},
    {4, 4, "", "0000,0001,0110,0111"},
    {4, 4, "", "0000,0001,0110,1010"},
    {4, 4, "", "0000,0001,0110,1011"},
    {4, 4, "", "0000,0001,0110,1110"},
    {4, 4, "", "0000,0001,0110,1111"},
    {4, 4, "", "0000,0001,1110,1111"},
    {4, 4, "", "0000,0011,0101,0110"},
    {4, 4, "", "0000,0011,0101,1001"},
    {4, 4, "", "0000,0011,0101,1010"},
    {4, 4, "", "0000,0011,0101,1110"},
    {4, 4, "", "0000,0011,1100,1111"},
    {4, 4, "", "0000,0011,1101,1110"},
};

// Cached enumeration per block, for id assignment and resolution.
const std::vector<CategoryStructure>& classes_of(int dims, int p) {
    static std::map<std::pair<int, int>, std::vector<CategoryStructure>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({dims, p});
    if (it == cache.end())
        it = cache.emplace(std::make_pair(dims, p), enumerate_classes(dims, p))
                 .first;
    return it->second;
}

int roman_to_type(const std::string& s) {
    static const std::map<std::string, int> types{
        {"I", 1}, {"II", 2}, {"III", 3}, {"IV", 4}, {"V", 5}, {"VI", 6}};
    const auto it = types.find(s);
    return it == types.end() ? 0 : it->second;
}

bool all_digits(const std::string& s) {
    if (s.empty())
        return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
}

} // namespace

const std::vector<CatalogRow>& catalog_rows() {
    static const std::vector<CatalogRow> rows = [] {
        std::vector<CatalogRow> built;
        built.reserve(std::size(kRows));
        int last_dims = 0, last_p = 0, index = 0;
        for (const auto& spec : kRows) {
            if (spec.dims != last_dims || spec.p != last_p) {
                last_dims = spec.dims;
                last_p = spec.p;
                index = 0;
            }
            built.push_back(CatalogRow{spec.dims, spec.p, ++index, spec.alias,
                                       parse_structure(spec.a, spec.dims)});
        }
        return built;
    }();
    return rows;
}

std::vector<const CatalogRow*> catalog_block(int dims, int p) {
    std::vector<const CatalogRow*> block;
    for (const auto& row : catalog_rows())
        if (row.dims == dims && row.p == p)
            block.push_back(&row);
    return block;
}

const CategoryStructure& shj_structure(int type) {
    if (type < 1 || type > 6)
        throw RangeError("six-way type " + std::to_string(type) +
                         " is outside [1, 6]");
    return catalog_block(3, 4)[type - 1]->structure;
}

std::string catalog_id(const CategoryStructure& s) {
    const auto canon = canonical_form(s);
    const auto& classes = classes_of(canon.dims(), canon.a_size());
    const auto it = std::find(classes.begin(), classes.end(), canon);
    const auto index = static_cast<int>(it - classes.begin()) + 1;
    return std::to_string(canon.dims()) + "[" + std::to_string(canon.a_size()) +
           "]-" + std::to_string(index);
}

CategoryStructure resolve_structure_id(const std::string& id) {
    if (id.empty())
        throw DataError("empty structure id");

    // bare Roman numeral: a six-way alias
    if (id.find('[') == std::string::npos) {
        const int type = roman_to_type(id);
        if (type == 0)
            throw DataError("\"" + id + "\" is not a catalog id or alias");
        return shj_structure(type);
    }

    const size_t open = id.find('[');
    const size_t close = id.find(']', open);
    if (close == std::string::npos || close + 1 >= id.size() ||
        id[close + 1] != '-')
        throw DataError("\"" + id +
                        "\" is not a catalog id (expected \"D[P]-k\")");
    const std::string dims_text = id.substr(0, open);
    const std::string p_text = id.substr(open + 1, close - open - 1);
    const std::string suffix = id.substr(close + 2);
    if (!all_digits(dims_text) || !all_digits(p_text) || suffix.empty())
        throw DataError("\"" + id +
                        "\" is not a catalog id (expected \"D[P]-k\")");
    const int dims = std::stoi(dims_text);
    const int p = std::stoi(p_text);
    if (dims < 2 || dims > 4 || p < 1 || 2 * p > (1 << dims))
        throw DataError("catalog block " + dims_text + "[" + p_text +
                        "] does not exist");

    if (!all_digits(suffix)) {
        const int type = roman_to_type(suffix);
        if (type == 0 || dims != 3 || p != 4)
            throw DataError("\"" + id + "\": the alias \"" + suffix +
                            "\" only names rows of the 3[4] block");
        return shj_structure(type);
    }
    const int k = std::stoi(suffix);
    const auto& classes = classes_of(dims, p);
    if (k < 1 || k > static_cast<int>(classes.size()))
        throw DataError("\"" + id + "\": index " + suffix + " is outside [1, " +
                        std::to_string(classes.size()) + "]");
    return classes[k - 1];
}

} // namespace catcomp
