#include "duocat/group.hpp"

#include <deque>
#include <string>
#include <unordered_set>

namespace duocat {

namespace {

std::string key_of(const Matrix& m) {
  std::string k;
  for (const auto& e : m.entries()) {
    k += e.str();
    k += ',';
  }
  return k;
}

}  // namespace

std::vector<Matrix> group_closure(const std::vector<Matrix>& generators,
                                  size_t bound) {
  int n = generators.empty() ? 0 : generators[0].rows();
  std::vector<Matrix> gens;
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n)
      throw Error("not a group action");  // non-square or size mismatch
    if (rank(g) != n) throw Error("not a group action");
    gens.push_back(g);
  }
  std::vector<Matrix> elements{Matrix::identity(n)};
  std::unordered_set<std::string> seen{key_of(elements[0])};
  std::deque<Matrix> frontier{elements[0]};
  while (!frontier.empty()) {
    Matrix cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      Matrix next = g * cur;
      std::string k = key_of(next);
      if (seen.insert(k).second) {
        if (elements.size() + 1 > bound) throw Error("group too large");
        elements.push_back(next);
        frontier.push_back(elements.back());
      }
    }
  }
  return elements;
}

Coinvariants coinvariants(const std::vector<Matrix>& generators, size_t bound) {
  if (generators.empty()) throw Error("coinvariants needs at least one matrix");
  int n = generators[0].rows();
  std::vector<Matrix> elements = group_closure(generators, bound);
  Matrix sum = Matrix::zero(n, n);
  for (const auto& g : elements) sum = sum + g;
  Matrix e = sum.scaled(Rational(1, static_cast<long>(elements.size())));
  Matrix inc = column_space_basis(e);
  // e = inc * quotient with quotient * inc = id, since inc spans im(e)
  // and e acts as the identity on its image.
  Matrix quot = solve(inc, e);
  return Coinvariants{e, inc, quot};
}

}  // namespace duocat
