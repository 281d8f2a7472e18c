#pragma once

#include <compare>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace cdp {

/// A permutation of {0,...,n-1} stored as an image word: images[i] = sigma(i).
///
/// Values are immutable after construction.  The matrix representation
/// m(sigma) places a 1 at (sigma(j), j), so that m(p)*m(q) = m(p∘q) with
/// (p∘q)(i) = p(q(i)), and tr(m(p)^T m(q)) counts the points where p and q
/// agree (0 exactly when they are completely different).
class Permutation {
public:
    /// Identity on n points.  n must be >= 1.
    static Permutation identity(int n);

    /// From an image word; validates bijectivity.
    explicit Permutation(std::vector<int> images);

    /// Parse cycle notation over the ground set {base,...,base+n-1}.
    /// Symbols inside a cycle are single characters when written densely
    /// ("(0123)") or separated by spaces/commas ("(10 11)(3 4)").  Omitted
    /// symbols are fixed points; "" , "()" and "id" denote the identity.
    static Permutation from_cycles(const std::string& text, int n, int base = 0);

    /// Disjoint-cycle rendering, fixed points omitted; identity prints "()".
    /// Symbols are separated by spaces whenever any exceeds one digit.
    std::string to_cycles(int base = 0) const;

    int degree() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_.at(i); }
    const std::vector<int>& images() const noexcept { return images_; }

    /// (this ∘ other)(i) = this(other(i)); degrees must match.
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;

    bool is_identity() const;
    int fixed_points() const;

    /// sigma(i) != other(i) for every i.
    bool completely_different(const Permutation& other) const;

    /// m(sigma) with entry (sigma(j), j) = 1.
    Eigen::MatrixXd matrix() const;
    Eigen::MatrixXcd cmatrix() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

inline Permutation compose(const Permutation& p, const Permutation& q) {
    return p.compose(q);
}
inline Permutation inverse(const Permutation& p) { return p.inverse(); }

Eigen::MatrixXd perm_matrix(const Permutation& p);

}  // namespace cdp
