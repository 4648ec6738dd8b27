#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace toespec {

// Multi-index alpha in N^n. Entries are the monomial exponents.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries);

  static MultiIndex zero(int n);
  static MultiIndex unit(int n, int j);  // 1_j, zero elsewhere

  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int j) const { return entries_[static_cast<size_t>(j)]; }
  int degree() const;  // |alpha|
  const std::vector<int>& entries() const { return entries_; }

  MultiIndex plus(const MultiIndex& other) const;
  // Component-wise difference; throws std::domain_error if any entry
  // would become negative.
  MultiIndex minus(const MultiIndex& other) const;
  bool dominates(const MultiIndex& other) const;  // this >= other componentwise

  bool operator==(const MultiIndex& other) const { return entries_ == other.entries_; }
  bool operator!=(const MultiIndex& other) const { return !(*this == other); }

  std::string to_string() const;                    // "a,b,c"
  static MultiIndex from_string(const std::string&);

 private:
  std::vector<int> entries_;
};

struct MultiIndexHash {
  size_t operator()(const MultiIndex& a) const;
};

// Graded lexicographic enumeration of all alpha in N^n with |alpha| <= cutoff.
// Within one degree block the order is lexicographic with the first entry
// largest first, so blocks are contiguous and degrees nondecreasing.
class BasisEnumeration {
 public:
  BasisEnumeration(int n, int cutoff);

  int dimension() const { return static_cast<int>(order_.size()); }
  int complex_dimension() const { return n_; }
  int cutoff() const { return cutoff_; }

  const MultiIndex& operator[](int i) const { return order_[static_cast<size_t>(i)]; }
  int degree(int i) const { return order_[static_cast<size_t>(i)].degree(); }

  // Ordinal of alpha; -1 when |alpha| > cutoff.
  int lookup(const MultiIndex& alpha) const;

  // First ordinal of the degree-k block.
  int block_start(int k) const;
  // Number of ordinals with degree <= k.
  int count_up_to_degree(int k) const;

 private:
  int n_;
  int cutoff_;
  std::vector<MultiIndex> order_;
  std::vector<int> block_start_;
  std::unordered_map<MultiIndex, int, MultiIndexHash> index_;
};

BasisEnumeration enumerate_basis(int n, int cutoff);

// Number of alpha in N^n with |alpha| = k, i.e. binomial(n-1+k, n-1).
std::int64_t degree_multiplicity(int n, int k);

// Exact binomial coefficient in 64-bit integers.
std::int64_t binomial(int n, int k);

// log(k!)
double log_factorial(int k);
// log(alpha!)
double log_factorial(const MultiIndex& alpha);

// num!/den! computed in the log domain with compensated summation.
// Throws std::domain_error when an entry of num or den is negative.
double factorial_ratio(const MultiIndex& num, const MultiIndex& den);
// a!/b! for scalar arguments, a,b >= 0.
double factorial_ratio(int a, int b);

// sqrt( (beta+alpha)!/beta! * (|beta|+n)!/(|beta|+|alpha|+n)! ),
// the coupling constant of the monomial Toeplitz operator.
double monomial_coupling(const MultiIndex& alpha, const MultiIndex& beta);

// sqrt( beta!/(beta-alpha)! * (|beta|+n)!/(|beta|-|alpha|+n)! ),
// the coupling constant of the derivative Toeplitz operator (beta >= alpha).
double derivative_coupling(const MultiIndex& alpha, const MultiIndex& beta);

}  // namespace toespec
