#include "symdet/semigroup.hpp"

#include <string>

#include "symdet/cone.hpp"
#include "symdet/errors.hpp"

namespace symdet {

int GeneratorSet::position(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n) throw DomainError("GeneratorSet::position: index out of range");
    if (i == j) return i - 1;                  // rays: m_11, m_22, ..., m_nn
    if (i == 1) return n + (j - 2);            // m_1j, j = 2..n
    // m_ij for 2 <= i < j <= n, lexicographic: offset within the tail block.
    int base = n + (n - 1);
    int skipped = 0;
    for (int a = 2; a < i; ++a) skipped += n - a;
    return base + skipped + (j - i - 1);
}

std::pair<int, int> GeneratorSet::label(int pos) const {
    if (pos < 0 || pos >= size()) throw DomainError("GeneratorSet::label: position out of range");
    if (pos < n) return {pos + 1, pos + 1};
    if (pos < 2 * n - 1) return {1, pos - n + 2};
    int rest = pos - (2 * n - 1);
    for (int a = 2; a < n; ++a) {
        int block = n - a;
        if (rest < block) return {a, a + rest + 1};
        rest -= block;
    }
    throw DomainError("GeneratorSet::label: position out of range");
}

GeneratorSet build_generators(int n) {
    if (n < 2) throw DomainError("build_generators: n must be >= 2");
    GeneratorSet gs;
    gs.n = n;
    gs.generators.reserve(static_cast<size_t>(n) * (n + 1) / 2);
    gs.generators.push_back(unit_vector(n, 1)); // m_11 = e_1
    for (int j = 2; j <= n; ++j) {              // m_jj = e_1 + 2 e_j
        LatticeVector v = unit_vector(n, 1);
        v[j - 1] = 2;
        gs.generators.push_back(std::move(v));
    }
    for (int j = 2; j <= n; ++j) {              // m_1j = e_1 + e_j
        LatticeVector v = unit_vector(n, 1);
        v[j - 1] = 1;
        gs.generators.push_back(std::move(v));
    }
    for (int i = 2; i < n; ++i) {               // m_ij = e_1 + e_i + e_j, i < j
        for (int j = i + 1; j <= n; ++j) {
            LatticeVector v = unit_vector(n, 1);
            v[i - 1] = 1;
            v[j - 1] = 1;
            gs.generators.push_back(std::move(v));
        }
    }
    return gs;
}

std::pair<Int, Int> ambient_and_dimension(int n, int t) {
    if (n < 2) throw DomainError("ambient_and_dimension: n must be >= 2");
    if (t < 2 || t > n) throw DomainError("ambient_and_dimension: t must satisfy 2 <= t <= n");
    Int ambient = Int(n) * (n + 1) / 2;
    Int codim = Int(n - t + 1) * (n - t + 2) / 2;
    return {ambient, ambient - codim};
}

RelationReport check_minor_relations(int n) {
    const GeneratorSet gs = build_generators(n);
    RelationReport rep;
    for (int i = 1; i <= n; ++i) {
        for (int k = i + 1; k <= n; ++k) {
            for (int j = 1; j <= n; ++j) {
                for (int l = j + 1; l <= n; ++l) {
                    ++rep.checked;
                    LatticeVector lhs = add(gs.at(i, j), gs.at(k, l));
                    LatticeVector rhs = add(gs.at(i, l), gs.at(k, j));
                    if (lhs != rhs) rep.violations.push_back({i, j, k, l});
                }
            }
        }
    }
    return rep;
}

bool minimality_check(int n) {
    const GeneratorSet gs = build_generators(n);
    for (const auto& g : gs.generators)
        if (g[0] != 1) return false; // grading assumption broken; cannot conclude
    for (int a = 0; a < gs.size(); ++a)
        for (int b = a + 1; b < gs.size(); ++b)
            if (gs.generators[a] == gs.generators[b]) return false;
    return true;
}

namespace {

// Can `target` be written as a sum of exactly `terms` generators (repetition
// allowed), choosing indices >= from? All generators have non-negative
// coordinates, so any negative coordinate prunes the branch.
bool expressible(const GeneratorSet& gs, LatticeVector target, int terms, int from) {
    if (terms == 0) {
        for (const auto& c : target)
            if (c != 0) return false;
        return true;
    }
    Int tail = 0; // remaining coordinate mass beyond the first entry
    for (size_t c = 1; c < target.size(); ++c) {
        if (target[c] < 0) return false;
        tail += target[c];
    }
    if (tail > 2 * terms) return false; // each generator contributes at most 2 there
    for (int idx = from; idx < gs.size(); ++idx) {
        if (expressible(gs, sub(target, gs.generators[idx]), terms - 1, idx)) return true;
    }
    return false;
}

} // namespace

SaturationReport saturation_check(int n, int bound, std::int64_t max_points) {
    if (n < 2) throw DomainError("saturation_check: n must be >= 2");
    if (bound < 1) throw DomainError("saturation_check: bound must be >= 1");

    std::int64_t box = bound + 1;
    for (int i = 1; i < n; ++i) {
        box *= 4 * static_cast<std::int64_t>(bound) + 1;
        if (box > max_points)
            throw ResourceError("saturation_check: box of " + std::to_string(box) +
                                "+ points exceeds budget " + std::to_string(max_points));
    }

    const GeneratorSet gs = build_generators(n);
    SaturationReport rep;
    LatticeVector p(n, 0);

    // Odometer over the box [0, bound] x [-2 bound, 2 bound]^(n-1).
    std::vector<long long> cur(n);
    cur[0] = 0;
    for (int i = 1; i < n; ++i) cur[i] = -2 * bound;
    while (true) {
        for (int i = 0; i < n; ++i) p[i] = cur[i];
        if (cone_contains(n, p)) {
            ++rep.cone_points;
            // Every generator has first coordinate 1, so a representation has
            // exactly p_1 terms.
            if (!expressible(gs, p, static_cast<int>(cur[0]), 0)) rep.violations.push_back(p);
        }
        int i = n - 1;
        while (i >= 1 && cur[i] == 2 * bound) { cur[i] = -2 * bound; --i; }
        if (i >= 1) { ++cur[i]; continue; }
        if (cur[0] == bound) break;
        ++cur[0];
    }
    return rep;
}

} // namespace symdet
