#include "toespec/multiindex.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace toespec {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_)
    if (e < 0) throw std::domain_error("MultiIndex: negative entry");
  if (entries_.empty()) throw std::domain_error("MultiIndex: dimension must be >= 1");
}

MultiIndex::MultiIndex(std::initializer_list<int> entries)
    : MultiIndex(std::vector<int>(entries)) {}

MultiIndex MultiIndex::zero(int n) { return MultiIndex(std::vector<int>(static_cast<size_t>(n), 0)); }

MultiIndex MultiIndex::unit(int n, int j) {
  std::vector<int> e(static_cast<size_t>(n), 0);
  e.at(static_cast<size_t>(j)) = 1;
  return MultiIndex(std::move(e));
}

int MultiIndex::degree() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

MultiIndex MultiIndex::plus(const MultiIndex& other) const {
  if (other.size() != size()) throw std::invalid_argument("MultiIndex: dimension mismatch");
  std::vector<int> e(entries_);
  for (size_t j = 0; j < e.size(); ++j) e[j] += other.entries_[j];
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::minus(const MultiIndex& other) const {
  if (other.size() != size()) throw std::invalid_argument("MultiIndex: dimension mismatch");
  std::vector<int> e(entries_);
  for (size_t j = 0; j < e.size(); ++j) {
    e[j] -= other.entries_[j];
    if (e[j] < 0) throw std::domain_error("MultiIndex: negative entry in difference");
  }
  return MultiIndex(std::move(e));
}

bool MultiIndex::dominates(const MultiIndex& other) const {
  if (other.size() != size()) return false;
  for (int j = 0; j < size(); ++j)
    if ((*this)[j] < other[j]) return false;
  return true;
}

std::string MultiIndex::to_string() const {
  std::ostringstream out;
  for (size_t j = 0; j < entries_.size(); ++j) {
    if (j) out << ',';
    out << entries_[j];
  }
  return out.str();
}

MultiIndex MultiIndex::from_string(const std::string& s) {
  std::vector<int> e;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) e.push_back(std::stoi(tok));
  return MultiIndex(std::move(e));
}

size_t MultiIndexHash::operator()(const MultiIndex& a) const {
  size_t h = 0x9e3779b97f4a7c15ull;
  for (int e : a.entries()) h = h * 1099511628211ull + static_cast<size_t>(e + 1);
  return h;
}

namespace {

// Compositions of k into n parts, lexicographically with the first part
// largest first: (k,0,..), ..., (0,..,0,k).
void append_degree_block(int n, int k, std::vector<MultiIndex>& out) {
  std::vector<int> a(static_cast<size_t>(n), 0);
  a[0] = k;
  while (true) {
    out.emplace_back(a);
    // find rightmost position < n-1 with a positive entry
    int i = n - 2;
    while (i >= 0 && a[static_cast<size_t>(i)] == 0) --i;
    if (i < 0) break;
    a[static_cast<size_t>(i)] -= 1;
    int rest = 1 + a[static_cast<size_t>(n - 1)];
    a[static_cast<size_t>(n - 1)] = 0;
    a[static_cast<size_t>(i + 1)] = rest;
  }
}

}  // namespace

BasisEnumeration::BasisEnumeration(int n, int cutoff) : n_(n), cutoff_(cutoff) {
  if (n < 1) throw std::invalid_argument("BasisEnumeration: n must be >= 1");
  if (cutoff < 0) throw std::invalid_argument("BasisEnumeration: cutoff must be >= 0");
  block_start_.reserve(static_cast<size_t>(cutoff) + 2);
  for (int k = 0; k <= cutoff; ++k) {
    block_start_.push_back(static_cast<int>(order_.size()));
    append_degree_block(n, k, order_);
  }
  block_start_.push_back(static_cast<int>(order_.size()));
  index_.reserve(order_.size());
  for (size_t i = 0; i < order_.size(); ++i) index_[order_[i]] = static_cast<int>(i);
}

int BasisEnumeration::lookup(const MultiIndex& alpha) const {
  auto it = index_.find(alpha);
  return it == index_.end() ? -1 : it->second;
}

int BasisEnumeration::block_start(int k) const {
  if (k < 0 || k > cutoff_) throw std::out_of_range("BasisEnumeration: degree out of range");
  return block_start_[static_cast<size_t>(k)];
}

int BasisEnumeration::count_up_to_degree(int k) const {
  if (k < 0) return 0;
  if (k >= cutoff_) return dimension();
  return block_start_[static_cast<size_t>(k) + 1];
}

BasisEnumeration enumerate_basis(int n, int cutoff) { return BasisEnumeration(n, cutoff); }

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
    // keep intermediates small
    std::int64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  return num / den;
}

std::int64_t degree_multiplicity(int n, int k) {
  if (n < 1) throw std::invalid_argument("degree_multiplicity: n must be >= 1");
  if (k < 0) throw std::invalid_argument("degree_multiplicity: k must be >= 0");
  return binomial(n - 1 + k, n - 1);
}

double log_factorial(int k) {
  if (k < 0) throw std::domain_error("log_factorial: negative argument");
  return std::lgamma(static_cast<double>(k) + 1.0);
}

double log_factorial(const MultiIndex& alpha) {
  double s = 0.0, c = 0.0;  // Kahan
  for (int j = 0; j < alpha.size(); ++j) {
    double y = log_factorial(alpha[j]) - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

namespace {

// log(a!/b!) as a sum of logs of integers, compensated.
double log_ratio_scalar(int a, int b) {
  if (a < 0 || b < 0) throw std::domain_error("factorial_ratio: negative argument");
  double sign = 1.0;
  if (a < b) {
    std::swap(a, b);
    sign = -1.0;
  }
  double s = 0.0, c = 0.0;
  for (int m = b + 1; m <= a; ++m) {
    double y = std::log(static_cast<double>(m)) - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return sign * s;
}

}  // namespace

double factorial_ratio(int a, int b) { return std::exp(log_ratio_scalar(a, b)); }

double factorial_ratio(const MultiIndex& num, const MultiIndex& den) {
  if (num.size() != den.size()) throw std::invalid_argument("factorial_ratio: dimension mismatch");
  double s = 0.0, c = 0.0;
  for (int j = 0; j < num.size(); ++j) {
    double y = log_ratio_scalar(num[j], den[j]) - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return std::exp(s);
}

double monomial_coupling(const MultiIndex& alpha, const MultiIndex& beta) {
  const int n = alpha.size();
  if (beta.size() != n) throw std::invalid_argument("monomial_coupling: dimension mismatch");
  double lr = 0.0;
  for (int j = 0; j < n; ++j) lr += log_ratio_scalar(beta[j] + alpha[j], beta[j]);
  lr += log_ratio_scalar(beta.degree() + n, beta.degree() + alpha.degree() + n);
  return std::exp(0.5 * lr);
}

double derivative_coupling(const MultiIndex& alpha, const MultiIndex& beta) {
  const int n = alpha.size();
  if (beta.size() != n) throw std::invalid_argument("derivative_coupling: dimension mismatch");
  if (!beta.dominates(alpha)) throw std::domain_error("derivative_coupling: beta < alpha");
  double lr = 0.0;
  for (int j = 0; j < n; ++j) lr += log_ratio_scalar(beta[j], beta[j] - alpha[j]);
  lr += log_ratio_scalar(beta.degree() + n, beta.degree() - alpha.degree() + n);
  return std::exp(0.5 * lr);
}

}  // namespace toespec
