#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "jackpoly/ratfun.hpp"

namespace jackpoly {

// Weakly decreasing list of positive integers; the empty list is the empty
// partition. Rows and columns of the diagram are 1-based everywhere.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    // 1-based row access, zero beyond the length.
    int part(int i) const;
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    // Graded order: by weight, then lexicographically decreasing, so that
    // dominance-larger partitions of equal weight come first.
    bool operator<(const Partition& o) const;

    Partition with_part_increased(int row) const;   // add one box in the given row
    Partition remove_row_prefix(int n) const;       // (lambda_{n+1}, lambda_{n+2}, ...)

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

struct Cell {
    int row = 1;
    int col = 1;
};

Partition conjugate(const Partition& lambda);
bool dominance_leq(const Partition& mu, const Partition& lambda); // WeightMismatch if |mu| != |lambda|
bool contains(const Partition& mu, const Partition& lambda);      // mu_i <= lambda_i for all i
long n_stat(const Partition& lambda);

// Content c_theta(box) = (j-1) - theta (i-1); independent of the diagram.
RatFun content_plain(const Cell& box, const RatFun& theta);
// c'_theta(box) = lambda_i - j + theta (lambda'_j - i); box must lie in lambda.
RatFun content_primed(const Cell& box, const Partition& lambda, const RatFun& theta);

// H(lambda, theta) = prod over boxes of (c'_theta(box) + 1).
RatFun hook_product_H(const Partition& lambda, const RatFun& theta);

bool in_fat_hook(const Partition& lambda, int n, int m);

// Modified Frobenius (n,m)-coordinates; NotInFatHook outside the hook.
struct FrobeniusCoords {
    std::vector<RatFun> p; // size n
    std::vector<RatFun> q; // size m
};
FrobeniusCoords frobenius_nm(const Partition& lambda, int n, int m);

struct FlatCoords {
    std::vector<int> a; // size n
    std::vector<int> b; // size m
};
FlatCoords frobenius_flat(const Partition& lambda, int n, int m);

// All partitions of weight <= max_weight matching the predicate, in graded
// reverse-lexicographic order.
std::vector<Partition> enumerate_partitions(
    int max_weight, const std::function<bool(const Partition&)>& predicate = nullptr);
std::vector<Partition> partitions_of_weight(int weight);

// Antichain of inclusion-maximal rectangles inside lambda; InvalidInput on
// the empty partition.
std::vector<Partition> maximal_rectangles(const Partition& lambda);

std::vector<Cell> cells_of(const Partition& lambda);

} // namespace jackpoly
