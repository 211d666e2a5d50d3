#pragma once

// Indexed bases of tensor, symmetric and exterior powers and of the degree
// three part of the free Lie ring, on a free lattice of given rank.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dfw {

enum class FunctorKind {
    tensor_power,
    sym_power,
    ext_power,
    lie3,       // free Lie ring, degree 3 (free lattices only)
    super_lie3, // super-Lie cube (presented groups only, no basis)
};

struct FunctorSpec {
    FunctorKind kind;
    unsigned degree;

    static FunctorSpec tensor(unsigned n) { return {FunctorKind::tensor_power, n}; }
    static FunctorSpec sym(unsigned n) { return {FunctorKind::sym_power, n}; }
    static FunctorSpec ext(unsigned n) { return {FunctorKind::ext_power, n}; }
    static FunctorSpec lie3() { return {FunctorKind::lie3, 3}; }
    static FunctorSpec super_lie3() { return {FunctorKind::super_lie3, 3}; }
};

inline constexpr unsigned max_tensor_degree = 4;
inline constexpr unsigned max_sym_degree = 5;
inline constexpr unsigned max_ext_degree = 3;

using Word = std::vector<std::size_t>;

/// Shape of a standard bracketing: a letter, or [left, right].
struct Bracket {
    Word word;
    std::optional<std::size_t> split; // length of the left factor
};

namespace detail {

    inline bool is_lyndon(const Word& w)
    {
        for (std::size_t k = 1; k < w.size(); ++k) {
            Word rot(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
            rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
            if (!(w < rot))
                return false;
        }
        return !w.empty();
    }

    inline void enumerate_words(std::size_t r, unsigned n, Word& prefix, std::vector<Word>& out,
                                FunctorKind kind)
    {
        if (prefix.size() == n) {
            if (kind != FunctorKind::lie3 || is_lyndon(prefix))
                out.push_back(prefix);
            return;
        }
        std::size_t start = 0;
        if (!prefix.empty()) {
            if (kind == FunctorKind::sym_power)
                start = prefix.back();
            else if (kind == FunctorKind::ext_power)
                start = prefix.back() + 1;
        }
        for (std::size_t i = start; i < r; ++i) {
            prefix.push_back(i);
            enumerate_words(r, n, prefix, out, kind);
            prefix.pop_back();
        }
    }

} // namespace detail

/// Words of length n (tensor), multisets (sym), strictly increasing tuples
/// (ext) or Lyndon words of length 3 (lie3), all in lexicographic order.
class FunctorBasis {
public:
    FunctorBasis(FunctorSpec spec, std::size_t source_rank) : spec_(spec), source_rank_(source_rank)
    {
        switch (spec.kind) {
        case FunctorKind::tensor_power:
            if (spec.degree > max_tensor_degree)
                throw std::invalid_argument("FunctorBasis: tensor degree out of range");
            break;
        case FunctorKind::sym_power:
            if (spec.degree > max_sym_degree)
                throw std::invalid_argument("FunctorBasis: symmetric degree out of range");
            break;
        case FunctorKind::ext_power:
            if (spec.degree > max_ext_degree)
                throw std::invalid_argument("FunctorBasis: exterior degree out of range");
            break;
        case FunctorKind::lie3:
            if (spec.degree != 3)
                throw std::invalid_argument("FunctorBasis: Lie basis only in degree 3");
            break;
        case FunctorKind::super_lie3:
            throw std::invalid_argument("FunctorBasis: the super-Lie cube has no indexed basis");
        }
        Word prefix;
        detail::enumerate_words(source_rank, spec.degree, prefix, elements_, spec.kind);
        for (std::size_t i = 0; i < elements_.size(); ++i)
            index_.emplace(elements_[i], i);
    }

    FunctorSpec spec() const noexcept { return spec_; }
    std::size_t source_rank() const noexcept { return source_rank_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const Word& operator[](std::size_t i) const { return elements_[i]; }
    const std::vector<Word>& elements() const noexcept { return elements_; }

    std::optional<std::size_t> index_of(const Word& w) const
    {
        auto it = index_.find(w);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    std::size_t at(const Word& w) const
    {
        auto i = index_of(w);
        if (!i)
            throw std::out_of_range("FunctorBasis: not a basis element");
        return *i;
    }

private:
    FunctorSpec spec_;
    std::size_t source_rank_;
    std::vector<Word> elements_;
    std::map<Word, std::size_t> index_;
};

/// Standard factorization w = uv with v the longest proper Lyndon suffix.
inline Bracket standard_bracketing(const Word& w)
{
    if (w.size() <= 1)
        return {w, std::nullopt};
    for (std::size_t k = 1; k < w.size(); ++k) {
        Word suffix(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
        if (detail::is_lyndon(suffix))
            return {w, k};
    }
    throw std::logic_error("standard_bracketing: no Lyndon suffix");
}

inline std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

inline std::string to_string(FunctorKind k)
{
    switch (k) {
    case FunctorKind::tensor_power: return "tensor";
    case FunctorKind::sym_power: return "SP";
    case FunctorKind::ext_power: return "Lambda";
    case FunctorKind::lie3: return "Lie3";
    case FunctorKind::super_lie3: return "Ls3";
    }
    return "?";
}

} // namespace dfw
