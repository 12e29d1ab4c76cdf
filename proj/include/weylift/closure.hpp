#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylift {

struct ClosureCapExceeded : std::runtime_error {
    size_t partial_count;
    explicit ClosureCapExceeded(size_t count)
        : std::runtime_error("closure cap exceeded after " + std::to_string(count) + " elements"),
          partial_count(count) {}
};

constexpr size_t kDefaultClosureCap = 2'000'000;

template <class Elem>
struct ClosureResult {
    size_t order = 0;
    std::vector<Elem> elements;      // sorted by canonical key
    std::vector<std::string> words;  // aligned with elements when tracked
};

// Breadth-first product closure of a finite set of generators.  Every group
// handled here is finite, so the generated semigroup is the generated group.
// `mul` composes two elements, `key` must be injective on values.
template <class Elem, class Mul, class Key>
ClosureResult<Elem> group_closure(const Elem& id, const std::vector<Elem>& gens,
                                  const std::vector<std::string>& labels, size_t cap, Mul mul,
                                  Key key, bool track_words = false) {
    if (cap < 1) throw std::invalid_argument("closure: cap must be >= 1");
    if (gens.size() && labels.size() && labels.size() != gens.size())
        throw std::invalid_argument("closure: one label per generator");

    std::map<std::string, std::pair<Elem, std::string>> seen;
    std::deque<std::string> frontier;
    seen.emplace(key(id), std::make_pair(id, std::string("e")));
    frontier.push_back(key(id));

    while (!frontier.empty()) {
        auto cur = seen.at(frontier.front());
        frontier.pop_front();
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            Elem next = mul(cur.first, gens[gi]);
            std::string k = key(next);
            if (seen.count(k)) continue;
            if (seen.size() >= cap) throw ClosureCapExceeded(seen.size());
            std::string word = cur.second == "e" ? (labels.empty() ? "g" + std::to_string(gi + 1) : labels[gi])
                                                 : cur.second + "*" +
                                                       (labels.empty() ? "g" + std::to_string(gi + 1) : labels[gi]);
            seen.emplace(k, std::make_pair(std::move(next), std::move(word)));
            frontier.push_back(std::move(k));
        }
    }

    ClosureResult<Elem> out;
    out.order = seen.size();
    out.elements.reserve(seen.size());
    for (auto& [k, v] : seen) {
        out.elements.push_back(std::move(v.first));
        if (track_words) out.words.push_back(std::move(v.second));
    }
    return out;
}

}  // namespace weylift
