#include "idiom/lattice_map.hpp"

#include "idiom/error.hpp"

namespace idiom {

LatticeMap::LatticeMap(LatticePtr domain, LatticePtr codomain, std::vector<Elem> table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
  if (!domain_ || !codomain_) throw Error(Errc::InvalidInput, "map without a lattice");
  if (table_.size() != domain_->size())
    throw Error(Errc::NotTotal, "table has " + std::to_string(table_.size()) + " entries, domain has " +
                                    std::to_string(domain_->size()));
  for (auto v : table_)
    if (v >= codomain_->size()) throw Error(Errc::NotTotal, "table value outside the codomain");
}

LatticeMap LatticeMap::identity(LatticePtr on) {
  std::vector<Elem> t(on->size());
  for (Elem x = 0; x < t.size(); ++x) t[x] = x;
  return LatticeMap(on, std::move(t));
}

LatticeMap LatticeMap::top_map(LatticePtr on) {
  auto top = on->top();
  return LatticeMap(on, std::vector<Elem>(on->size(), top));
}

LatticeMap LatticeMap::constant(LatticePtr domain, LatticePtr codomain, Elem value) {
  auto n = domain->size();
  return LatticeMap(std::move(domain), std::move(codomain), std::vector<Elem>(n, value));
}

bool LatticeMap::leq(const LatticeMap& other) const {
  require_same_lattice(domain_, other.domain_);
  require_same_lattice(codomain_, other.codomain_);
  for (std::size_t x = 0; x < table_.size(); ++x)
    if (!codomain_->leq(table_[x], other.table_[x])) return false;
  return true;
}

bool LatticeMap::operator==(const LatticeMap& other) const {
  return table_ == other.table_ && same_lattice(domain_, other.domain_) &&
         same_lattice(codomain_, other.codomain_);
}

std::string LatticeMap::to_string() const {
  std::string out;
  for (Elem x = 0; x < table_.size(); ++x) {
    if (x) out += ", ";
    out += domain_->id(x) + ">" + codomain_->id(table_[x]);
  }
  return out;
}

LatticeMap compose(const LatticeMap& outer, const LatticeMap& inner) {
  require_same_lattice(inner.codomain(), outer.domain());
  std::vector<Elem> t(inner.table().size());
  for (Elem x = 0; x < t.size(); ++x) t[x] = outer(inner(x));
  return LatticeMap(inner.domain(), outer.codomain(), std::move(t));
}

bool is_idiom_morphism(const LatticeMap& f) {
  const auto& A = *f.domain();
  const auto& B = *f.codomain();
  if (f(A.bottom()) != B.bottom() || f(A.top()) != B.top()) return false;
  for (Elem x = 0; x < A.size(); ++x)
    for (Elem y = x + 1; y < A.size(); ++y) {
      if (f(A.meet(x, y)) != B.meet(f(x), f(y))) return false;
      if (f(A.join(x, y)) != B.join(f(x), f(y))) return false;
    }
  return true;
}

}  // namespace idiom
