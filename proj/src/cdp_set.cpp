#include "cdp/cdp_set.hpp"

#include <algorithm>
#include <string>

#include "cdp/error.hpp"

namespace cdp {

CdpSet::CdpSet(std::vector<Permutation> perms, bool) : perms_(std::move(perms)) {
    compute_flags();
}

CdpSet CdpSet::verify(std::vector<Permutation> perms) {
    if (perms.empty()) throw Error("not-maximal", "empty permutation set");
    const int n = perms.front().degree();
    for (const auto& p : perms)
        if (p.degree() != n) throw Error("dimension-error", "mixed degrees in CDP set");
    if (static_cast<int>(perms.size()) != n)
        throw Error("not-maximal", "expected " + std::to_string(n) + " permutations, got " +
                                       std::to_string(perms.size()));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int j = 0; j < n; ++j)
                if (perms[a](j) == perms[b](j))
                    throw Error("not-cdp", "permutations " + std::to_string(a) + " and " +
                                               std::to_string(b) + " agree at point " + std::to_string(j));
    return CdpSet(std::move(perms), true);
}

void CdpSet::compute_flags() {
    const int n = this->n();
    has_identity_ = false;
    for (const auto& p : perms_)
        if (p.is_identity()) { has_identity_ = true; break; }

    abelian_ = true;
    for (int a = 0; a < n && abelian_; ++a) {
        const auto& pa = perms_[a].images();
        for (int b = a + 1; b < n && abelian_; ++b) {
            const auto& pb = perms_[b].images();
            for (int i = 0; i < n; ++i)
                if (pa[pb[i]] != pb[pa[i]]) { abelian_ = false; break; }
        }
    }

    // Closure of a finite subset of S(n) under composition makes it a
    // subgroup; without the identity it cannot be closed.
    group_ = has_identity_;
    if (group_) {
        std::vector<const std::vector<int>*> sorted;
        sorted.reserve(n);
        for (const auto& p : perms_) sorted.push_back(&p.images());
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto* a, const auto* b) { return *a < *b; });
        std::vector<int> scratch(n);
        for (int a = 0; a < n && group_; ++a) {
            const auto& pa = perms_[a].images();
            for (int b = 0; b < n && group_; ++b) {
                const auto& pb = perms_[b].images();
                for (int i = 0; i < n; ++i) scratch[i] = pa[pb[i]];
                group_ = std::binary_search(sorted.begin(), sorted.end(), &scratch,
                                            [](const auto* x, const auto* y) { return *x < *y; });
            }
        }
    }
}

CdpSet CdpSet::cyclic(int n) {
    if (n < 1) throw Error("invalid-degree", "cyclic: n must be >= 1");
    std::vector<Permutation> perms;
    perms.reserve(n);
    for (int k = 0; k < n; ++k) {
        std::vector<int> img(n);
        for (int t = 0; t < n; ++t) img[t] = (t + k) % n;
        perms.emplace_back(std::move(img));
    }
    return CdpSet(std::move(perms), true);
}

CdpSet CdpSet::regular_representation(const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    if (n < 1) throw Error("not-a-group", "empty table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw Error("not-a-group", "table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw Error("not-a-group", "table entry out of range");
    }
    int e = -1;
    for (int i = 0; i < n; ++i) {
        bool left_id = true, right_id = true;
        for (int j = 0; j < n; ++j) {
            if (table[i][j] != j) left_id = false;
            if (table[j][i] != j) right_id = false;
        }
        if (left_id && right_id) { e = i; break; }
    }
    if (e < 0) throw Error("not-a-group", "no two-sided identity element");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw Error("not-a-group", "associativity fails at (" + std::to_string(i) + "," +
                                                   std::to_string(j) + "," + std::to_string(k) + ")");
    std::vector<Permutation> perms;
    perms.reserve(n);
    for (int i = 0; i < n; ++i) {
        try {
            perms.emplace_back(table[i]);
        } catch (const Error&) {
            throw Error("not-a-group", "row " + std::to_string(i) + " is not a permutation");
        }
    }
    return verify(std::move(perms));  // inverses follow from the axioms
}

bool CdpSet::is_canonical() const {
    for (int i = 0; i < n(); ++i)
        if (perms_[i](0) != i) return false;
    return true;
}

CdpSet CdpSet::canonicalized() const {
    std::vector<Permutation> sorted = perms_;
    std::sort(sorted.begin(), sorted.end(),
              [](const Permutation& a, const Permutation& b) { return a(0) < b(0); });
    return CdpSet(std::move(sorted), true);
}

bool CdpSet::same_set(const CdpSet& other) const {
    if (n() != other.n()) return false;
    auto words = [](const CdpSet& s) {
        std::vector<std::vector<int>> w;
        for (const auto& p : s.perms()) w.push_back(p.images());
        std::sort(w.begin(), w.end());
        return w;
    };
    return words(*this) == words(other);
}

CdpSet CdpSet::conjugated() const {
    if (!is_canonical()) throw Error("not-canonical", "conjugated set requires canonical order");
    const int n = this->n();
    std::vector<Permutation> E;
    E.reserve(n);
    for (int j = 0; j < n; ++j) {
        std::vector<int> img(n);
        for (int k = 0; k < n; ++k) img[perms_[k](j)] = k;
        E.emplace_back(std::move(img));
    }
    return verify(std::move(E));
}

Permutation CdpSet::xi() const {
    if (!is_canonical()) throw Error("not-canonical", "xi requires canonical order");
    if (!perms_[0].is_identity())
        throw Error("missing-identity", "xi requires the identity permutation in the set");
    const int n = this->n();
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = perms_[i].inverse()(0);
    for (int i = 0; i < n; ++i)
        if (perms_[img[i]](i) != 0)
            throw Error("xi-undefined",
                        "defining relation is not symmetric at index " + std::to_string(i) +
                            " (the set is not a group)");
    return Permutation(std::move(img));
}

CdpSet CdpSet::transformed(const Permutation& left, const Permutation& right) const {
    std::vector<Permutation> out;
    out.reserve(n());
    for (const auto& p : perms_) out.push_back(left.compose(p).compose(right));
    return verify(std::move(out));
}

CdpSet CdpSet::inverse_set() const {
    std::vector<Permutation> out;
    out.reserve(n());
    for (const auto& p : perms_) out.push_back(p.inverse());
    return verify(std::move(out));
}

std::pair<CdpSet, Permutation> CdpSet::abelianized() const {
    const CdpSet canon = is_canonical() ? *this : canonicalized();
    if (!canon.conjugated().is_abelian())
        throw Error("not-abelianizable", "conjugated matrix set is not abelian");
    const Permutation& s1 = canon[0];  // the unique element fixing 0
    const Permutation s1inv = s1.inverse();
    std::vector<Permutation> out;
    out.reserve(n());
    for (const auto& p : canon.perms()) out.push_back(p.compose(s1inv));
    CdpSet result = verify(std::move(out));
    if (!result.is_abelian() || !result.is_group())
        throw Error("not-abelianizable", "right translation did not produce an abelian group");
    return {std::move(result), s1};
}

namespace {

/// Row-by-row Latin-square backtracking with column-conflict bitmasks.
/// Row i is forced to start with symbol i, which visits every maximal set
/// exactly once (images of 0 are pairwise distinct across rows).
class Enumerator {
public:
    using Sink = std::function<void(std::vector<Permutation>)>;

    Enumerator(int n, bool canonical_rows, const Sink& sink)
        : n_(n), canonical_(canonical_rows), sink_(sink), cols_(n, 0u), rows_(n, std::vector<int>(n)) {}

    void run() { place_row(0); }

private:
    void place_row(int i) {
        if (i == n_) {
            emit();
            return;
        }
        rows_[i][0] = i;
        const unsigned bit = 1u << i;
        cols_[0] |= bit;
        fill(i, 1, bit);
        cols_[0] &= ~bit;
    }

    void fill(int i, int pos, unsigned used) {
        if (pos == n_) {
            place_row(i + 1);
            return;
        }
        for (int v = 0; v < n_; ++v) {
            const unsigned bit = 1u << v;
            if ((used & bit) || (cols_[pos] & bit)) continue;
            rows_[i][pos] = v;
            cols_[pos] |= bit;
            fill(i, pos + 1, used | bit);
            cols_[pos] &= ~bit;
        }
    }

    void emit() {
        auto sorted = rows_;
        if (!canonical_) std::sort(sorted.begin(), sorted.end());
        std::vector<Permutation> perms;
        perms.reserve(n_);
        for (auto& r : sorted) perms.emplace_back(std::move(r));
        sink_(std::move(perms));
    }

    int n_;
    bool canonical_;
    const Sink& sink_;
    std::vector<unsigned> cols_;
    std::vector<std::vector<int>> rows_;
};

}  // namespace

void enumerate_cdp_sets(int n, bool canonical_rows,
                        const std::function<void(const CdpSet&)>& yield, int bound) {
    if (n < 1) throw Error("invalid-degree", "enumerate: n must be >= 1");
    if (n > bound)
        throw Error("enumeration-bound", "n = " + std::to_string(n) + " exceeds the enumeration bound " +
                                             std::to_string(bound));
    Enumerator::Sink sink = [&](std::vector<Permutation> perms) {
        yield(CdpSet(std::move(perms), true));
    };
    Enumerator(n, canonical_rows, sink).run();
}

std::vector<CdpSet> enumerate_all(int n, bool canonical_rows, int bound) {
    std::vector<CdpSet> out;
    enumerate_cdp_sets(n, canonical_rows, [&](const CdpSet& s) { out.push_back(s); }, bound);
    return out;
}

}  // namespace cdp
