#include "pascalian/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>

#include "pascalian/errors.hpp"

namespace pascalian {

BigInt pascalian_number(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        throw DomainError("pascalian_number: need 0 <= k <= n, got n=" + std::to_string(n) +
                          ", k=" + std::to_string(k));
    }
    return binomial(static_cast<unsigned long>(n), static_cast<unsigned long>((n - k) / 2));
}

std::vector<BigInt> triangle_row(int n) {
    if (n < 0) throw DomainError("triangle_row: negative n");
    std::vector<BigInt> row;
    row.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) row.push_back(pascalian_number(n, k));
    return row;
}

int enumeration_cap() {
    const char* env = std::getenv("PASCALIAN_CAP");
    if (env == nullptr || *env == '\0') return kDefaultEnumerationCap;
    std::string_view text(env);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1 ||
        value > kMaxEnumerationCap) {
        throw DomainError("PASCALIAN_CAP must be an integer in [1, " +
                          std::to_string(kMaxEnumerationCap) + "], got '" + std::string(text) + "'");
    }
    return value;
}

// ---------------------------------------------------------------------------
// Tableau

Tableau::Tableau(int n, const std::vector<int>& horizontal_first_row) {
    if (n < 1) throw DomainError("Tableau: need at least one domino");
    horizontal_.assign(static_cast<std::size_t>(n), false);
    for (int label : horizontal_first_row) {
        if (label < 1 || label > n) {
            throw DomainError("Tableau: label " + std::to_string(label) + " outside 1.." +
                              std::to_string(n));
        }
        if (horizontal_[label - 1]) {
            throw DomainError("Tableau: repeated label " + std::to_string(label));
        }
        horizontal_[label - 1] = true;
    }
}

std::vector<int> Tableau::horizontal_labels() const {
    std::vector<int> labels;
    for (int i = 0; i < size(); ++i) {
        if (horizontal_[i]) labels.push_back(i + 1);
    }
    return labels;
}

std::vector<Shape> Tableau::partial_shapes() const {
    std::vector<Shape> shapes;
    shapes.reserve(horizontal_.size());
    Shape s;
    for (bool horizontal : horizontal_) {
        if (horizontal) {
            s.first += 2;  // horizontal in row 1
        } else if (s.first != s.second) {
            s.second += 2;  // horizontal in row 2
        } else {
            s.first += 1;  // vertical
            s.second += 1;
        }
        shapes.push_back(s);
    }
    return shapes;
}

Shape Tableau::shape() const { return partial_shapes().back(); }

std::string Tableau::subset_string() const {
    std::string out = "{";
    bool first = true;
    for (int label : horizontal_labels()) {
        if (!first) out += ',';
        out += std::to_string(label);
        first = false;
    }
    out += '}';
    return out;
}

// ---------------------------------------------------------------------------
// Walk

Walk Walk::parse(std::string_view text) {
    std::vector<bool> steps;
    steps.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'U':
            case 'u':
            case '1':
                steps.push_back(true);
                break;
            case 'D':
            case 'd':
            case '0':
                steps.push_back(false);
                break;
            default:
                throw DomainError(std::string("Walk::parse: unexpected character '") + c + "'");
        }
    }
    return Walk(std::move(steps));
}

int Walk::up_count() const {
    return static_cast<int>(std::count(steps_.begin(), steps_.end(), true));
}

std::string Walk::to_string() const {
    std::string out;
    out.reserve(steps_.size());
    for (bool up : steps_) out += up ? 'U' : 'D';
    return out;
}

int walk_height(const Walk& w) {
    int level = 0;
    int best = 0;
    for (bool up : w.steps()) {
        level += up ? 1 : -1;
        best = std::max(best, level);
    }
    return best;
}

Shape shape_of(const Tableau& t) { return t.shape(); }

Walk phi(const Tableau& t) {
    const int n = t.size();
    std::vector<bool> steps(static_cast<std::size_t>(n), false);
    for (int s = 1; s <= n; ++s) {
        if (t.is_horizontal_in_first_row(s)) steps[n - s] = true;  // step n+1-s, 0-based n-s
    }
    return Walk(std::move(steps));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void check_enumerable(const char* what, int n, int cap) {
    if (n < 1) throw DomainError(std::string(what) + ": n must be positive");
    if (n > cap) {
        throw ResourceError(std::string(what) + ": n=" + std::to_string(n) +
                            " exceeds the enumeration cap " + std::to_string(cap));
    }
    if (n > kMaxEnumerationCap) {
        throw ResourceError(std::string(what) + ": n=" + std::to_string(n) +
                            " exceeds the hard ceiling " + std::to_string(kMaxEnumerationCap));
    }
}

}  // namespace

std::vector<Tableau> enumerate_tableaux(int n, int cap) {
    check_enumerable("enumerate_tableaux", n, cap);
    const std::size_t count = std::size_t{1} << n;

    std::vector<std::vector<int>> subsets;
    subsets.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
        std::vector<int> labels;
        for (int bit = 0; bit < n; ++bit) {
            if (mask & (std::size_t{1} << bit)) labels.push_back(bit + 1);
        }
        subsets.push_back(std::move(labels));
    }
    std::sort(subsets.begin(), subsets.end());

    std::vector<Tableau> out;
    out.reserve(count);
    for (const auto& labels : subsets) out.emplace_back(n, labels);
    return out;
}

std::vector<Tableau> enumerate_tableaux(int n) { return enumerate_tableaux(n, enumeration_cap()); }

std::vector<BigInt> height_histogram(int n, int cap) {
    check_enumerable("height_histogram", n, cap);
    std::vector<unsigned long> counts(static_cast<std::size_t>(n) + 1, 0);
    const std::size_t count = std::size_t{1} << n;
    for (std::size_t mask = 0; mask < count; ++mask) {
        int level = 0;
        int best = 0;
        for (int bit = 0; bit < n; ++bit) {
            level += (mask >> bit) & 1 ? 1 : -1;
            best = std::max(best, level);
        }
        ++counts[best];
    }
    std::vector<BigInt> out;
    out.reserve(counts.size());
    for (unsigned long c : counts) out.emplace_back(c);
    return out;
}

std::vector<BigInt> height_histogram(int n) { return height_histogram(n, enumeration_cap()); }

}  // namespace pascalian
