#pragma once

#include <string>
#include <vector>

#include "locring/field.hpp"

namespace locring {

// Ambient polynomial ring: the coefficient field plus named variables.
struct Ring {
    Field field;
    std::vector<std::string> vars;

    int nvars() const { return static_cast<int>(vars.size()); }

    int var_index(const std::string& name) const {
        for (int i = 0; i < nvars(); ++i)
            if (vars[i] == name) return i;
        return -1;
    }

    // extended ring with one trailing tag variable, for elimination
    Ring with_tag() const;
};

}  // namespace locring
