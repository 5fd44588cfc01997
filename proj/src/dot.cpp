#include "qtl/dot.hpp"

#include <sstream>

namespace qtl {
namespace {

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string hasse_dot(const Quantale& q) {
  const Lattice& l = q.lattice();
  std::ostringstream out;
  out << "digraph hasse {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle];\n";
  for (int x = 0; x < l.size(); ++x) {
    out << "  n" << x << " [label=\"" << escape(l.label(x)) << "\"];\n";
  }
  for (const auto& [lower, upper] : l.covers()) {
    out << "  n" << lower << " -> n" << upper << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string specialization_dot(const Quantale& q, const Spectrum& spectrum) {
  const SubbasisTopology space = SubbasisTopology::build(q, spectrum);
  std::ostringstream out;
  out << "digraph specialization {\n";
  out << "  node [shape=box];\n";
  for (int p = 0; p < space.point_count(); ++p) {
    out << "  p" << p << " [label=\"<"
        << escape(q.lattice().label(spectrum.points[static_cast<size_t>(p)].generator()))
        << ">\"];\n";
  }
  for (int a = 0; a < space.point_count(); ++a) {
    const SmallSet closure = space.point_closure(a);
    for (int b : closure) {
      if (b != a) out << "  p" << a << " -> p" << b << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace qtl
