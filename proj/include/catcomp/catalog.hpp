#pragma once
// The reference catalog of small category structures: every equivalence
// class with up to 4 dimensions and up to half the space in category A,
// listed in the traditional block order (2[1], 2[2], 3[1] ... 4[4]) with the
// traditional row order inside each block. The 3[4] block rows carry the
// Roman-numeral aliases I..VI of the six classic six-way types.
//
// The listing order inside a block is historical, not derivable; it is
// pinned here as data. Catalog ids "D[P]-k" use the deterministic
// enumeration index instead (position in enumerate_classes(D, P), 1-based).

#include <string>
#include <vector>

#include "catcomp/structure.hpp"

namespace catcomp {

struct CatalogRow {
    int dims = 0;
    int p = 0;
    int row_in_block = 0;        // 1-based listing position
    std::string alias;           // "I".."VI" in the 3[4] block, else empty
    CategoryStructure structure; // representative exactly as listed
};

// All 46 rows, block-major.
const std::vector<CatalogRow>& catalog_rows();

// Rows of one block, listing order.
std::vector<const CatalogRow*> catalog_block(int dims, int p);

// The six-way types; type in [1, 6].
const CategoryStructure& shj_structure(int type);

// "3[4]-2": block plus 1-based enumeration index of the class.
std::string catalog_id(const CategoryStructure& s);

// Accepts "D[P]-k", "D[P]-<roman>" (3[4] only), or a bare Roman numeral
// I..VI. Throws DataError when the id does not resolve.
CategoryStructure resolve_structure_id(const std::string& id);

} // namespace catcomp
