#include "pushout/catalog.hpp"

#include <map>
#include <utility>

namespace pushout::catalog {

namespace {

// Algebra spanned by a set of matrix units closed under multiplication.
AlgebraPtr unit_algebra(std::string name,
                        const std::vector<std::pair<std::size_t, std::size_t>>& units) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < units.size(); ++k) {
    index[units[k]] = k;
    names.push_back("e" + std::to_string(units[k].first + 1) + std::to_string(units[k].second + 1));
  }
  const std::size_t d = units.size();
  std::vector<Vector> products(d * d, Vector(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto [p, q] = units[i];
      auto [r, s] = units[j];
      if (q != r) continue;
      products[i * d + j].at(index.at({p, s})) = 1;
    }
  return new_algebra(std::move(name), std::move(names), std::move(products));
}

}  // namespace

AlgebraPtr ground_field() { return new_algebra("k", {"e"}, {Vector{1}}); }

AlgebraPtr null_line() { return new_algebra("N2", {"n"}, {Vector{0}}); }

AlgebraPtr matrix_algebra(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) units.emplace_back(p, q);
  return unit_algebra("M" + std::to_string(n), units);
}

AlgebraPtr upper_triangular(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p; q < n; ++q) units.emplace_back(p, q);
  return unit_algebra("T" + std::to_string(n), units);
}

AlgebraPtr strictly_upper(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) units.emplace_back(p, q);
  return unit_algebra("N" + std::to_string(n), units);
}

AlgebraPtr first_row() { return unit_algebra("R2", {{0, 0}, {0, 1}}); }

AlgebraPtr diagonal(std::size_t n) {
  std::vector<std::string> names;
  std::vector<Vector> products(n * n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("d" + std::to_string(i + 1));
    products[i * n + i][i] = 1;
  }
  return new_algebra("D" + std::to_string(n), std::move(names), std::move(products));
}

AlgebraPtr direct_sum(const AlgebraPtr& a, const AlgebraPtr& b, std::string name) {
  const std::size_t na = a->dim();
  const std::size_t n = na + b->dim();
  std::vector<std::string> names = a->basis_names();
  for (const auto& s : b->basis_names()) names.push_back(s + "'");
  std::vector<Vector> products(n * n, Vector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector& p = products[i * n + j];
      if (i < na && j < na) {
        for (std::size_t k = 0; k < na; ++k) p[k] = a->structure_constant(i, j, k);
      } else if (i >= na && j >= na) {
        for (std::size_t k = 0; k < b->dim(); ++k)
          p[na + k] = b->structure_constant(i - na, j - na, k);
      }
    }
  return new_algebra(std::move(name), std::move(names), std::move(products));
}

Envelope unit_inclusion(const AlgebraPtr& sub, const AlgebraPtr& amb) {
  Matrix embedding(amb->dim(), sub->dim());
  for (std::size_t a = 0; a < sub->dim(); ++a) {
    bool found = false;
    for (std::size_t b = 0; b < amb->dim() && !found; ++b) {
      if (amb->basis_names()[b] == sub->basis_names()[a]) {
        embedding(b, a) = 1;
        found = true;
      }
    }
    if (!found) throw PreconditionError("unit_inclusion: no unit named " + sub->basis_names()[a]);
  }
  return Envelope(sub, amb, std::move(embedding));
}

Envelope first_summand(const AlgebraPtr& a, const AlgebraPtr& sum) {
  Matrix embedding(sum->dim(), a->dim());
  for (std::size_t i = 0; i < a->dim(); ++i) embedding(i, i) = 1;
  return Envelope(a, sum, std::move(embedding));
}

}  // namespace pushout::catalog
