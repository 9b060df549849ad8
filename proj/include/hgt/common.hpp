#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hgt {

/// A precondition of an operation does not hold (invalid gauge, non-minimal input, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Violation {
    std::string identity;
    std::vector<std::string> witness;
    std::string detail;
};

/// Outcome of an exhaustive verification sweep. Keeps the first `kept_limit`
/// violations and counts the rest.
class Report {
public:
    static constexpr std::size_t kept_limit = 32;

    bool ok() const { return violation_count_ == 0; }
    std::size_t violation_count() const { return violation_count_; }
    std::size_t checks() const { return checks_; }
    const std::vector<Violation>& violations() const { return violations_; }
    const std::vector<std::string>& notes() const { return notes_; }

    void count_check(std::size_t n = 1) { checks_ += n; }
    void add(Violation v)
    {
        ++violation_count_;
        if (violations_.size() < kept_limit) violations_.push_back(std::move(v));
    }
    void note(std::string text) { notes_.push_back(std::move(text)); }
    void merge(const Report& other)
    {
        checks_ += other.checks_;
        for (const auto& v : other.violations_) add(v);
        violation_count_ += other.violation_count_ - other.violations_.size();
        notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
    }
    /// First violation of the named identity, if any.
    std::optional<Violation> first(const std::string& identity) const
    {
        for (const auto& v : violations_)
            if (v.identity == identity) return v;
        return std::nullopt;
    }

private:
    std::vector<Violation> violations_;
    std::vector<std::string> notes_;
    std::size_t violation_count_ = 0;
    std::size_t checks_ = 0;
};

/// Finite formal sum over GF(2) of terms of type T, kept sorted with repeated
/// pairs cancelled.
template <class T>
class F2Combination {
public:
    F2Combination() = default;
    explicit F2Combination(T term) { terms_.push_back(std::move(term)); }

    static F2Combination from_terms(std::vector<T> terms)
    {
        std::sort(terms.begin(), terms.end());
        std::vector<T> out;
        out.reserve(terms.size());
        for (std::size_t i = 0; i < terms.size();) {
            std::size_t j = i;
            while (j < terms.size() && terms[j] == terms[i]) ++j;
            if ((j - i) & 1) out.push_back(std::move(terms[i]));
            i = j;
        }
        F2Combination c;
        c.terms_ = std::move(out);
        return c;
    }

    const std::vector<T>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool contains(const T& t) const { return std::binary_search(terms_.begin(), terms_.end(), t); }

    F2Combination& operator+=(const F2Combination& other)
    {
        std::vector<T> out;
        out.reserve(terms_.size() + other.terms_.size());
        std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                      other.terms_.end(), std::back_inserter(out));
        terms_ = std::move(out);
        return *this;
    }
    friend F2Combination operator+(F2Combination a, const F2Combination& b) { return a += b; }
    friend bool operator==(const F2Combination&, const F2Combination&) = default;

private:
    std::vector<T> terms_;
};

/// Accumulates terms with repetition and cancels them once at the end.
template <class T>
class F2Accumulator {
public:
    void toggle(T term) { terms_.push_back(std::move(term)); }
    void add(const F2Combination<T>& c) { terms_.insert(terms_.end(), c.terms().begin(), c.terms().end()); }
    F2Combination<T> finish() { return F2Combination<T>::from_terms(std::move(terms_)); }

private:
    std::vector<T> terms_;
};

}  // namespace hgt
