#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weylift/closure.hpp"

namespace weylift {

struct ClosureSummary {
    std::string set_name;
    size_t order = 0;
    std::vector<std::string> words;          // shortest word per element, when requested
    std::vector<std::string> element_dumps;  // full element text, when requested
};

// Named generator sets runnable from the command line, keyed "name:rank".
// Names: gl-weyl, gl-tits, gl-sdot, sl-lift, so-odd-lift, B-weyl-lift,
// C-tits, C-invariant, D-weyl-lift, pin-gl, pin-b, pin-d, spin-b, quat-c.
ClosureSummary run_catalog_closure(const std::string& spec, size_t cap, bool with_words,
                                   bool with_elements);

std::vector<std::string> catalog_names();

}  // namespace weylift
