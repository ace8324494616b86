#include "catcomp/boolcomp.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <limits>

namespace catcomp {

namespace {

// Per-dimension sort rank: positive literal, negated literal, unconstrained.
int dimension_rank(const Implicant& imp, int j) {
    const Stimulus bit = static_cast<Stimulus>(1u << (imp.dims - 1 - j));
    if ((imp.care_mask & bit) == 0)
        return 2;
    return (imp.values & bit) ? 0 : 1;
}

} // namespace

int Implicant::literal_count() const {
    return std::popcount(static_cast<unsigned>(care_mask));
}

std::string Implicant::render() const {
    std::string out;
    for (int j = 0; j < dims; ++j) {
        const Stimulus bit = static_cast<Stimulus>(1u << (dims - 1 - j));
        if ((care_mask & bit) == 0)
            continue;
        out.push_back(static_cast<char>('a' + j));
        if ((values & bit) == 0)
            out.push_back('\'');
    }
    return out;
}

bool implicant_less(const Implicant& lhs, const Implicant& rhs) {
    for (int j = 0; j < lhs.dims; ++j) {
        const int a = dimension_rank(lhs, j);
        const int b = dimension_rank(rhs, j);
        if (a != b)
            return a < b;
    }
    return false;
}

std::vector<Stimulus> implicant_stimuli(const Implicant& imp) {
    const Stimulus space_mask =
        static_cast<Stimulus>((1u << imp.dims) - 1);
    const Stimulus free_mask = static_cast<Stimulus>(space_mask & ~imp.care_mask);
    std::vector<Stimulus> out;
    Stimulus sub = 0;
    while (true) {
        out.push_back(static_cast<Stimulus>(imp.values | sub));
        if (sub == free_mask)
            break;
        sub = static_cast<Stimulus>((sub - free_mask) & free_mask);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool cube_inside_a(const CategoryStructure& s, Stimulus care, Stimulus values) {
    const Stimulus space_mask = static_cast<Stimulus>((1u << s.dims()) - 1);
    const Stimulus free_mask = static_cast<Stimulus>(space_mask & ~care);
    Stimulus sub = 0;
    while (true) {
        if (!s.contains(static_cast<Stimulus>(values | sub)))
            return false;
        if (sub == free_mask)
            break;
        sub = static_cast<Stimulus>((sub - free_mask) & free_mask);
    }
    return true;
}

} // namespace

std::vector<Implicant> prime_implicants(const CategoryStructure& s) {
    const int d = s.dims();
    const Stimulus space_mask = static_cast<Stimulus>((1u << d) - 1);
    std::vector<Implicant> primes;
    for (Stimulus care = 0;; ++care) {
        Stimulus values = 0;
        while (true) {
            if (cube_inside_a(s, care, values)) {
                // maximal iff widening along any constrained dimension escapes A
                bool maximal = true;
                for (int b = 0; b < d && maximal; ++b) {
                    const Stimulus bit = static_cast<Stimulus>(1u << b);
                    if ((care & bit) &&
                        cube_inside_a(s, static_cast<Stimulus>(care & ~bit),
                                      static_cast<Stimulus>(values & ~bit)))
                        maximal = false;
                }
                if (maximal)
                    primes.push_back(Implicant{d, care, values});
            }
            if (values == care)
                break;
            values = static_cast<Stimulus>((values - care) & care);
        }
        if (care == space_mask)
            break;
    }
    std::sort(primes.begin(), primes.end(), implicant_less);
    return primes;
}

namespace {

using CoverBits = std::bitset<256>;

struct SearchState {
    const std::vector<Implicant>* primes = nullptr;
    const std::vector<CoverBits>* coverage = nullptr;
    CoverBits all;
    int min_prime_literals = 0;
    int best_cost = std::numeric_limits<int>::max();
    std::vector<int> best_pick;
    std::vector<int> pick;
};

// (literal count, implicant count, lexicographic cover) comparison of the
// current pick against the best so far.
bool pick_improves(SearchState& st, int cost) {
    if (cost != st.best_cost)
        return cost < st.best_cost;
    if (st.pick.size() != st.best_pick.size())
        return st.pick.size() < st.best_pick.size();
    auto sorted = [&](const std::vector<int>& ids) {
        std::vector<Implicant> cover;
        cover.reserve(ids.size());
        for (int id : ids)
            cover.push_back((*st.primes)[id]);
        std::sort(cover.begin(), cover.end(), implicant_less);
        return cover;
    };
    const auto lhs = sorted(st.pick);
    const auto rhs = sorted(st.best_pick);
    return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(),
                                        rhs.end(), implicant_less);
}

void search(SearchState& st, const CoverBits& covered, int cost) {
    if (cost + (covered == st.all ? 0 : st.min_prime_literals) > st.best_cost)
        return;
    if (covered == st.all) {
        if (pick_improves(st, cost)) {
            st.best_cost = cost;
            st.best_pick = st.pick;
        }
        return;
    }
    // branch on the uncovered element with the fewest covering primes
    const CoverBits missing = st.all & ~covered;
    int element = -1;
    size_t fewest = std::numeric_limits<size_t>::max();
    for (size_t e = 0; e < missing.size(); ++e) {
        if (!missing.test(e))
            continue;
        size_t count = 0;
        for (const auto& bits : *st.coverage)
            if (bits.test(e))
                ++count;
        if (count < fewest) {
            fewest = count;
            element = static_cast<int>(e);
        }
    }
    for (size_t id = 0; id < st.primes->size(); ++id) {
        if (!(*st.coverage)[id].test(static_cast<size_t>(element)))
            continue;
        st.pick.push_back(static_cast<int>(id));
        search(st, covered | (*st.coverage)[id],
               cost + (*st.primes)[id].literal_count());
        st.pick.pop_back();
    }
}

} // namespace

BoolComplexityResult boolean_complexity(const CategoryStructure& s) {
    const auto primes = prime_implicants(s);
    const auto& a = s.a_set();

    std::vector<CoverBits> coverage(primes.size());
    for (size_t id = 0; id < primes.size(); ++id)
        for (size_t e = 0; e < a.size(); ++e)
            if (primes[id].covers(a[e]))
                coverage[id].set(e);

    SearchState st;
    st.primes = &primes;
    st.coverage = &coverage;
    for (size_t e = 0; e < a.size(); ++e)
        st.all.set(e);
    st.min_prime_literals = std::numeric_limits<int>::max();
    for (const auto& p : primes)
        st.min_prime_literals = std::min(st.min_prime_literals, p.literal_count());

    search(st, CoverBits{}, 0);

    BoolComplexityResult result;
    result.literal_count = st.best_cost;
    for (int id : st.best_pick)
        result.minimal_cover.push_back(primes[id]);
    std::sort(result.minimal_cover.begin(), result.minimal_cover.end(),
              implicant_less);
    result.formula_text = render_formula(result.minimal_cover);
    return result;
}

std::string render_formula(std::vector<Implicant> cover) {
    std::sort(cover.begin(), cover.end(), implicant_less);
    std::string out;
    for (size_t i = 0; i < cover.size(); ++i) {
        if (i > 0)
            out += " + ";
        out += cover[i].render();
    }
    return out;
}

} // namespace catcomp
