#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qcgr/errors.hpp"

namespace qcgr {

using bigint = boost::multiprecision::cpp_int;

/// Integer partition: weakly decreasing nonnegative parts, stored with
/// trailing zeros trimmed. (2,1) and (2,1,0) are the same value and hash
/// to the same key. Immutable after construction.
///
/// Ordering is the graded order used everywhere in this library: first by
/// weight, then reverse-lexicographically on parts, so that within one
/// degree (2,0) precedes (1,1). This matches the Schubert-basis
/// enumeration order.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// Parses the serialized form "6,4,2,1"; the empty partition is "0".
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    /// Part i (0-based); 0 beyond the stored length.
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::size_t length() const { return parts_.size(); }
    int weight() const;
    bool empty() const { return parts_.empty(); }

    Partition transpose() const;
    /// Componentwise containment inner ⊆ *this.
    bool contains(const Partition& inner) const;
    bool fits_in_box(int rows, int cols) const;
    /// λ_1 = ... = λ_k when padded to k parts (includes the empty partition).
    bool is_rectangular(int k) const;

    std::string to_string() const;

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }
    std::strong_ordering operator<=>(const Partition& other) const;

private:
    std::vector<int> parts_;
};

/// Exact binomial coefficient; throws on 64-bit overflow.
std::uint64_t binomial(int n, int k);

/// All partitions in the k×(n−k) box, in graded order. Requires 1 ≤ k < n.
std::vector<Partition> enumerate_basis(int k, int n);

/// The pair (k, n) fixing Gr(k,n), its Schubert basis P_k(n) and the
/// position of each partition in it.
class GrContext {
public:
    GrContext(int k, int n);

    int k() const { return k_; }
    int n() const { return n_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<Partition>& basis() const { return basis_; }
    const Partition& basis_at(std::size_t i) const { return basis_.at(i); }

    bool in_box(const Partition& p) const { return p.fits_in_box(k_, n_ - k_); }
    /// Basis position; throws parameter_error if λ ∉ P_k(n).
    std::size_t index_of(const Partition& p) const;

    /// λ^∨ = (n−k−λ_k, ..., n−k−λ_1); an involution on P_k(n).
    Partition complement(const Partition& p) const;

private:
    int k_ = 0;
    int n_ = 0;
    std::vector<Partition> basis_;
    std::map<Partition, std::size_t> index_;
};

/// Per-box data of the Young diagram of λ relative to k:
///   content = k − i + j,   hook = λ_i + λᵗ_j − i − j + 1,
/// plus the paired sequences a_r = k − i + λ_i − j + 1 and b_r = hook
/// for the same box (a_r is a reordering of the contents within each row,
/// and a_r ≥ b_r always, with equality everywhere iff λ is rectangular).
struct HookCell {
    int row;  // 1-based
    int col;  // 1-based
    int content;
    int hook;
};

struct HookData {
    std::vector<HookCell> cells;
    std::vector<int> a_seq;
    std::vector<int> b_seq;
    /// max_r a_r = k + λ_1 − 1 (0 boxes ⇒ k − 1).
    int max_a = 0;
};

HookData hook_data(const Partition& lambda, int k);

/// dim 𝕊_λ(V) for V = ℂ^k by the hook-length formula, in exact integer
/// arithmetic: ∏ content / ∏ hook. Requires at most k parts.
bigint hook_dimension(const Partition& lambda, int k);
double hook_dimension_as_double(const Partition& lambda, int k);

}  // namespace qcgr
