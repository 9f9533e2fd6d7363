#include "chevwidth/steinberg.hpp"


#include "chevwidth/errors.hpp"

namespace chevwidth {

SteinbergWord::SteinbergWord(const RootSystem& s, const Ring& r, std::vector<Letter> l)
    : system(&s), ring(&r), letters(std::move(l)) {
  for (const auto& x : letters) {
    require(x.root >= 0 && x.root < s.num_roots(), ErrorCode::InvalidType, "root index out of range");
    require(x.param.ring_ptr() == &r, ErrorCode::DescriptorMismatch, "letter parameter outside " + r.name());
  }
}

void SteinbergWord::append(RootId root, const Elem& param) {
  require(root >= 0 && root < system->num_roots(), ErrorCode::InvalidType, "root index out of range");
  require(param.ring_ptr() == ring, ErrorCode::DescriptorMismatch, "letter parameter outside " + ring->name());
  letters.push_back({root, param});
}

SteinbergWord SteinbergWord::operator*(const SteinbergWord& o) const {
  require(system == o.system && ring == o.ring, ErrorCode::RepMismatch, "words over different groups");
  SteinbergWord r = *this;
  r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
  return r;
}

SteinbergWord SteinbergWord::inverse() const {
  SteinbergWord r(*system, *ring);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back({it->root, -it->param});
  return r;
}

GroupElement word_eval(const SteinbergWord& w, const Representation& rep) {
  require(w.system == &rep.system(), ErrorCode::RepMismatch,
          "word over " + w.system->label() + " evaluated in " + rep.name());
  GroupElement g = identity_element(rep, *w.ring);
  for (const auto& l : w.letters) g.times_elementary(l.root, l.param);
  return g;
}

SteinbergWord w_word(const RootSystem& system, RootId a, const Elem& u) {
  require(u.is_unit(), ErrorCode::NotAUnit, u.to_string() + " is not a unit");
  return SteinbergWord(system, u.ring(), {{a, u}, {system.negate(a), -u.inverse()}, {a, u}});
}

SteinbergWord h_word(const RootSystem& system, RootId a, const Elem& u) {
  return w_word(system, a, u) * w_word(system, a, -u.ring().one());
}

SteinbergWord symbol_word(const RootSystem& system, const SymbolExpr& s) {
  require(s.u.is_unit(), ErrorCode::NotAUnit, s.u.to_string() + " is not a unit");
  require(s.v.is_unit(), ErrorCode::NotAUnit, s.v.to_string() + " is not a unit");
  const Elem one = s.u.ring().one();
  return w_word(system, s.root, s.u * s.v) * w_word(system, s.root, -s.u) * w_word(system, s.root, one) *
         w_word(system, s.root, -s.v);
}

SteinbergWord reduce(const SteinbergWord& w) {
  SteinbergWord r(*w.system, *w.ring);
  for (const auto& l : w.letters) {
    if (!r.letters.empty() && r.letters.back().root == l.root) {
      r.letters.back().param = r.letters.back().param + l.param;
      if (r.letters.back().param.is_zero()) r.letters.pop_back();
    } else if (!l.param.is_zero()) {
      r.letters.push_back(l);
    }
  }
  return r;
}

SteinbergWord collect(const SteinbergWord& w, const std::function<int(RootId)>& rank) {
  const RootSystem& R = *w.system;
  const auto& L = ChevalleyBasis::get(R);
  std::vector<Letter> rest;
  for (const auto& l : w.letters)
    if (!l.param.is_zero()) rest.push_back(l);
  SteinbergWord out(R, *w.ring);
  while (!rest.empty()) {
    RootId m = rest.front().root;
    for (const auto& l : rest)
      if (rank(l.root) < rank(m)) m = l.root;
    // Moving x_m(r) to the front of y_1 ... y_k gives
    // x_m(r) [x_m(-r), y_1] y_1 ... [x_m(-r), y_k] y_k.
    Elem acc = w.ring->zero();
    std::vector<Letter> others;
    for (const auto& l : rest) {
      if (l.root != m) {
        others.push_back(l);
        continue;
      }
      std::vector<Letter> moved;
      for (const auto& y : others) {
        for (const auto& t : L.commutator(m, y.root)) {
          require(rank(t.root) > rank(m) && rank(t.root) > rank(y.root), ErrorCode::InternalError,
                  "collection order is not compatible with the commutator formula");
          Elem c = (-l.param).pow(t.i) * y.param.pow(t.j) * w.ring->from_int(t.coeff);
          if (!c.is_zero()) moved.push_back({t.root, std::move(c)});
        }
        moved.push_back(y);
      }
      others = std::move(moved);
      acc = acc + l.param;
    }
    if (!acc.is_zero()) out.letters.push_back({m, acc});
    rest = std::move(others);
  }
  return out;
}

SteinbergWord collect_unipotent(const SteinbergWord& w) {
  const RootSystem& R = *w.system;
  bool pos = false, neg = false;
  for (const auto& l : w.letters) (R.is_positive(l.root) ? pos : neg) = true;
  require(!(pos && neg), ErrorCode::MixedSigns, "word mixes positive and negative roots");
  return collect(w, [](RootId r) { return r; });
}

std::string verdict_name(K2Verdict v) {
  switch (v) {
    case K2Verdict::InK2: return "InK2";
    case K2Verdict::NotInK2: return "NotInK2";
    case K2Verdict::UnknownModuloCenter: return "UnknownModuloCenter";
  }
  return "?";
}

K2Verdict k2_witness(const SteinbergWord& w) {
  const RootSystem& R = *w.system;
  switch (R.type()) {
    case 'A':
      return is_identity(word_eval(w, Representation::get(R, RepKind::StandardSL))) ? K2Verdict::InK2
                                                                                     : K2Verdict::NotInK2;
    case 'C':
      return is_identity(word_eval(w, Representation::get(R, RepKind::StandardSp))) ? K2Verdict::InK2
                                                                                     : K2Verdict::NotInK2;
    case 'G':
    case 'F':
    case 'E':
      if (R.type() != 'E' || R.rank() == 8)
        return is_identity(word_eval(w, Representation::get(R, RepKind::Adjoint))) ? K2Verdict::InK2
                                                                                    : K2Verdict::NotInK2;
      [[fallthrough]];
    default:
      // The adjoint kernel is the centre: identity there only says the image
      // is central.
      return is_identity(word_eval(w, Representation::get(R, RepKind::Adjoint))) ? K2Verdict::UnknownModuloCenter
                                                                                  : K2Verdict::NotInK2;
  }
}

}  // namespace chevwidth
