#include "flc/presets.hpp"

#include "flc/error.hpp"

namespace flc::presets {

namespace {

const QuadraticScalar kSqrt2 = QuadraticScalar::root(2);

}  // namespace

PointSetDescriptor integer_lattice(std::size_t n) {
  std::vector<GroupElement> basis;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<QuadraticScalar> c(n);
    c[i] = 1;
    basis.push_back(GroupElement::abelian(std::move(c)));
  }
  return PointSetDescriptor::lattice(n == 1 ? "Z" : "Z^" + std::to_string(n), GroupKind::abelian, std::move(basis));
}

PointSetDescriptor composite_lattice() {
  return PointSetDescriptor::lattice("Z+(1/4+Z)", GroupKind::abelian, {GroupElement::abelian({1})},
                                     {GroupElement::abelian({0}), GroupElement::abelian({QuadraticScalar::rational(1, 4)})});
}

PointSetDescriptor silver_mean() {
  return PointSetDescriptor::model_set("silver-mean", GroupKind::abelian, {{1, kSqrt2}}, {{1, -kSqrt2}},
                                       GroupKind::abelian, Window::ball(1, 1));
}

PointSetDescriptor heisenberg_lattice() {
  return PointSetDescriptor::lattice("H(Z)", GroupKind::heisenberg,
                                     {GroupElement::heisenberg(1, 0, 0), GroupElement::heisenberg(0, 1, 0),
                                      GroupElement::heisenberg(0, 0, 1)});
}

PointSetDescriptor heisenberg_silver_mean() {
  CoordinateMatrix phys(3, std::vector<QuadraticScalar>(6));
  CoordinateMatrix internal(3, std::vector<QuadraticScalar>(6));
  for (std::size_t c = 0; c < 3; ++c) {
    phys[c][2 * c] = 1;
    phys[c][2 * c + 1] = kSqrt2;
    internal[c][2 * c] = 1;
    internal[c][2 * c + 1] = -kSqrt2;
  }
  return PointSetDescriptor::model_set("H(Z[sqrt2])-model-set", GroupKind::heisenberg, std::move(phys),
                                       std::move(internal), GroupKind::heisenberg, Window::ball(3, 1));
}

std::vector<std::string> names() {
  return {"z", "z2", "composite", "silver_mean", "heisenberg_lattice", "heisenberg_silver_mean"};
}

PointSetDescriptor by_name(const std::string& name) {
  if (name == "z") return integer_lattice(1);
  if (name == "z2") return integer_lattice(2);
  if (name == "composite") return composite_lattice();
  if (name == "silver_mean") return silver_mean();
  if (name == "heisenberg_lattice") return heisenberg_lattice();
  if (name == "heisenberg_silver_mean") return heisenberg_silver_mean();
  throw DomainError("unknown preset '" + name + "'");
}

}  // namespace flc::presets
