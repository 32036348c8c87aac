#pragma once

#include <cmath>
#include <complex>
#include <unordered_map>
#include <vector>

#include "ellgraph/errors.hpp"
#include "ellgraph/types.hpp"

namespace ellgraph {

// Function on a fixed, ordered finite vertex set. The domain order is frozen
// at creation; values are stored densely in that order. Spectral and heat
// routines work on the real instantiation; the complex one exists for
// completeness of the container only.
template <typename Scalar>
class BasicVertexFunction {
 public:
  BasicVertexFunction() = default;

  BasicVertexFunction(std::vector<VertexId> domain, std::vector<Scalar> values)
      : domain_(std::move(domain)), values_(std::move(values)) {
    if (domain_.size() != values_.size())
      raise("DomainMismatch", "domain and value arrays differ in length");
    build_index();
  }

  static BasicVertexFunction zeros(std::vector<VertexId> domain) {
    std::vector<Scalar> v(domain.size(), Scalar(0));
    return BasicVertexFunction(std::move(domain), std::move(v));
  }

  static BasicVertexFunction constant(std::vector<VertexId> domain, Scalar c) {
    std::vector<Scalar> v(domain.size(), c);
    return BasicVertexFunction(std::move(domain), std::move(v));
  }

  // delta_x extended by zero over `domain`
  static BasicVertexFunction indicator(std::vector<VertexId> domain, VertexId x) {
    auto f = zeros(std::move(domain));
    f.set(x, Scalar(1));
    return f;
  }

  std::size_t size() const { return domain_.size(); }
  bool empty() const { return domain_.empty(); }
  const std::vector<VertexId>& domain() const { return domain_; }
  const std::vector<Scalar>& values() const { return values_; }
  std::vector<Scalar>& values() { return values_; }

  bool has(VertexId v) const { return index_.count(v) > 0; }

  Scalar at(VertexId v) const {
    auto it = index_.find(v);
    if (it == index_.end())
      raise("MissingValue", "function not defined at vertex " + std::to_string(v));
    return values_[it->second];
  }

  Scalar at_or(VertexId v, Scalar fallback) const {
    auto it = index_.find(v);
    return it == index_.end() ? fallback : values_[it->second];
  }

  void set(VertexId v, Scalar value) {
    auto it = index_.find(v);
    if (it == index_.end())
      raise("MissingValue", "vertex " + std::to_string(v) + " not in domain");
    values_[it->second] = value;
  }

  std::vector<VertexId> support(double tol = 0.0) const {
    std::vector<VertexId> s;
    for (std::size_t i = 0; i < domain_.size(); ++i)
      if (std::abs(values_[i]) > tol) s.push_back(domain_[i]);
    return s;
  }

  double sup_norm() const {
    double m = 0;
    for (const auto& v : values_) m = std::max(m, std::abs(v));
    return m;
  }

  double l2_norm() const {
    double s = 0;
    for (const auto& v : values_) s += std::norm(std::complex<double>(v));
    return std::sqrt(s);
  }

 private:
  void build_index() {
    index_.reserve(domain_.size());
    for (std::size_t i = 0; i < domain_.size(); ++i) {
      if (!index_.emplace(domain_[i], i).second)
        raise("DuplicateVertex", "vertex repeated in function domain");
    }
  }

  std::vector<VertexId> domain_;
  std::vector<Scalar> values_;
  std::unordered_map<VertexId, std::size_t> index_;
};

using VertexFunction = BasicVertexFunction<double>;
using ComplexVertexFunction = BasicVertexFunction<std::complex<double>>;

// Antisymmetric function on oriented edges: one value is stored per
// undirected edge on the canonical orientation [min(x,y), max(x,y)], and
// phi([x,y]) = -phi([y,x]) holds by construction.
class EdgeFunction {
 public:
  void set(VertexId x, VertexId y, double oriented_value) {
    if (x == y) raise("LoopEdge", "edge function on a loop");
    values_[key(x, y)] = (x < y) ? oriented_value : -oriented_value;
  }

  bool has(VertexId x, VertexId y) const { return values_.count(key(x, y)) > 0; }

  double at(VertexId x, VertexId y) const {
    auto it = values_.find(key(x, y));
    if (it == values_.end()) raise("MissingValue", "edge not present");
    return (x < y) ? it->second : -it->second;
  }

  std::size_t edge_count() const { return values_.size(); }

  // <phi,psi> over unordered edges present in both
  double inner(const EdgeFunction& other) const {
    double s = 0;
    for (const auto& [k, v] : values_) {
      auto it = other.values_.find(k);
      if (it != other.values_.end()) s += v * it->second;
    }
    return s;
  }

 private:
  static std::pair<VertexId, VertexId> key(VertexId x, VertexId y) {
    return {std::min(x, y), std::max(x, y)};
  }

  struct PairHash {
    std::size_t operator()(const std::pair<VertexId, VertexId>& p) const {
      return std::hash<VertexId>()(p.first) * 1000003u ^ std::hash<VertexId>()(p.second);
    }
  };

  std::unordered_map<std::pair<VertexId, VertexId>, double, PairHash> values_;
};

}  // namespace ellgraph
