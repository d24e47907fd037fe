#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pascalian/bigint.hpp"

namespace pascalian {

/// <n k> = C(n, floor((n-k)/2)): the number of two-row standard domino tableaux
/// with n dominos and shape (n+k, n-k). Throws DomainError unless 0 <= k <= n.
BigInt pascalian_number(int n, int k);

/// Row n of the Pascalian triangle, k = 0..n.
std::vector<BigInt> triangle_row(int n);

/// Default enumeration cap, overridable through the PASCALIAN_CAP environment variable.
inline constexpr int kDefaultEnumerationCap = 14;

/// Hard ceiling on any cap: beyond it the 2^n objects no longer fit comfortably in memory.
inline constexpr int kMaxEnumerationCap = 26;

/// The active enumeration cap. Reads PASCALIAN_CAP on every call; a malformed or
/// out-of-range value throws DomainError.
int enumeration_cap();

/// Row lengths (lambda_1, lambda_2) of a two-row tableau.
struct Shape {
    int first = 0;
    int second = 0;

    auto operator<=>(const Shape&) const = default;

    /// k in (n+k, n-k).
    int excess() const { return (first - second) / 2; }
};

/// A two-row standard domino tableau, encoded by the set of labels whose domino
/// lies horizontally in the first row. That set determines the tableau uniquely;
/// the shape and the partial tableaux are recovered by replaying the insertions.
class Tableau {
   public:
    /// Throws DomainError if n < 1 or a label falls outside 1..n or repeats.
    Tableau(int n, const std::vector<int>& horizontal_first_row);

    int size() const { return static_cast<int>(horizontal_.size()); }

    bool is_horizontal_in_first_row(int label) const { return horizontal_.at(label - 1); }

    /// Sorted ascending.
    std::vector<int> horizontal_labels() const;

    /// Shapes of T_1, ..., T_n where T_i keeps only the dominos labelled 1..i.
    std::vector<Shape> partial_shapes() const;

    Shape shape() const;

    /// e.g. "{1,3}"; "{}" for the empty set.
    std::string subset_string() const;

    bool operator==(const Tableau&) const = default;

   private:
    std::vector<bool> horizontal_;
};

/// A rightward diagonal lattice walk. Step i (1-based) is up when steps()[i-1] is true.
class Walk {
   public:
    Walk() = default;
    explicit Walk(std::vector<bool> steps) : steps_(std::move(steps)) {}

    /// Parses a string over {U,D} (or {1,0}). Throws DomainError on any other character.
    static Walk parse(std::string_view text);

    int size() const { return static_cast<int>(steps_.size()); }
    bool is_up(int step) const { return steps_.at(step - 1); }
    const std::vector<bool>& steps() const { return steps_; }

    int up_count() const;

    /// "UDDU" form.
    std::string to_string() const;

    bool operator==(const Walk&) const = default;
    auto operator<=>(const Walk& other) const { return steps_ <=> other.steps_; }

   private:
    std::vector<bool> steps_;
};

/// Maximum over all prefixes (the empty one included) of #ups - #downs.
int walk_height(const Walk& w);

Shape shape_of(const Tableau& t);

/// Step n+1-s of phi(t) is up iff s is a horizontal first-row label of t.
Walk phi(const Tableau& t);

/// All 2^n tableaux of B_n in lexicographic order of their sorted label sets.
/// Throws ResourceError when n exceeds `cap`, DomainError when n < 1.
std::vector<Tableau> enumerate_tableaux(int n, int cap);
std::vector<Tableau> enumerate_tableaux(int n);

/// Number of n-step walks of each height k = 0..n, by exhaustive enumeration.
std::vector<BigInt> height_histogram(int n, int cap);
std::vector<BigInt> height_histogram(int n);

}  // namespace pascalian
