#include "orderdim/realize.hpp"

#include <algorithm>
#include <array>

#include "orderdim/classify.hpp"

namespace orderdim {
namespace {

constexpr std::array<std::pair<MemberClass, std::string_view>, 7> kClassNames{{
    {MemberClass::StrictLinear, "strict-linear"},
    {MemberClass::Linear, "linear"},
    {MemberClass::IntervalOrder, "interval"},
    {MemberClass::StrongInterval, "strong-interval"},
    {MemberClass::Semiorder, "semiorder"},
    {MemberClass::LinearInterval, "linear-interval"},
    {MemberClass::LinearSemiorder, "linear-semiorder"},
}};

bool is_linear_member(const Relation& m, MemberClass cls) {
  return is_reflexive_class(cls) ? is_linear_order(m) : is_strict_linear_order(m);
}

PartnerClass partner_of(MemberClass cls) {
  return cls == MemberClass::LinearSemiorder ? PartnerClass::Semiorder : PartnerClass::IntervalOrder;
}

std::string pair_text(const Relation& r, Index a, Index b) {
  return "(" + r.label(a) + "," + r.label(b) + ")";
}

void check_preconditions(const Relation& r, MemberClass cls) {
  if (!is_reflexive_class(cls)) {
    if (auto check = is_acyclic(r); !check) {
      throw Error(Errc::CyclicInput, "realizers of this class need an acyclic relation", check.witness);
    }
    return;
  }
  if (auto check = is_transitively_antisymmetric(r); !check) {
    throw Error(Errc::SymmetricPair, "realizers of this class need a transitively antisymmetric relation",
                check.witness);
  }
  for (Index i = 0; i < r.size(); ++i) {
    if (!r.contains(i, i)) {
      throw Error(Errc::NotReflexive, "element " + r.label(i) + " is not related to itself");
    }
  }
}

struct Member {
  Relation relation;
  std::optional<Decomposition> provenance;
};

// strict is a strict partial order here; the member extends it.
Member build_member(const Relation& strict, MemberClass cls, const DecomposeOptions& opts) {
  switch (cls) {
    case MemberClass::StrictLinear: return {linear_extension(strict), std::nullopt};
    case MemberClass::Linear: return {reflexive_closure(linear_extension(strict)), std::nullopt};
    case MemberClass::IntervalOrder: return {interval_extension(strict), std::nullopt};
    case MemberClass::StrongInterval: return {reflexive_closure(interval_extension(strict)), std::nullopt};
    case MemberClass::Semiorder: return {semiorder_extension(strict), std::nullopt};
    case MemberClass::LinearInterval:
    case MemberClass::LinearSemiorder: {
      try {
        Decomposition d = decompose(strict, partner_of(cls), opts);
        Relation m = d.linear_part & d.partner;
        return {std::move(m), std::move(d)};
      } catch (const Error& e) {
        if (e.code() != Errc::NoDecompositionFound) throw;
        throw Error(Errc::MemberConstructionFailed,
                    "no decomposition for an augmented relation (" + std::string(e.what()) + ")");
      }
    }
  }
  throw Error(Errc::InvalidArgument, "unknown member class");
}

}  // namespace

std::string_view to_string(MemberClass c) {
  for (auto [cls, name] : kClassNames)
    if (cls == c) return name;
  return "?";
}

std::optional<MemberClass> member_class_from_string(std::string_view name) {
  for (auto [cls, n] : kClassNames)
    if (n == name) return cls;
  return std::nullopt;
}

bool is_reflexive_class(MemberClass c) {
  return c == MemberClass::Linear || c == MemberClass::StrongInterval;
}

bool is_hybrid_class(MemberClass c) {
  return c == MemberClass::LinearInterval || c == MemberClass::LinearSemiorder;
}

bool member_in_class(const Relation& m, MemberClass cls, const DecomposeOptions& opts) {
  switch (cls) {
    case MemberClass::StrictLinear: return is_strict_linear_order(m);
    case MemberClass::Linear: return is_linear_order(m);
    case MemberClass::IntervalOrder: return is_interval_order(m);
    case MemberClass::StrongInterval: return is_strong_interval_order(m);
    case MemberClass::Semiorder: return is_semiorder(m);
    case MemberClass::LinearInterval:
    case MemberClass::LinearSemiorder:
      if (!is_irreflexive(m) || !is_transitive(m)) return false;
      try {
        return verify_decomposition(m, decompose(m, partner_of(cls), opts));
      } catch (const Error& e) {
        if (e.code() == Errc::NoDecompositionFound) return false;
        throw;
      }
  }
  return false;
}

Relation realizer_target(const Relation& r, MemberClass cls) {
  if (is_reflexive_class(cls)) return reflexive_closure(transitive_closure(without_diagonal(r)));
  return transitive_closure(r);
}

Realizer realizer(const Relation& r, MemberClass cls, const DecomposeOptions& opts) {
  check_preconditions(r, cls);
  const Relation target = realizer_target(r, cls);
  const Relation strict = is_reflexive_class(cls) ? without_diagonal(target) : target;

  std::vector<Member> built;
  built.push_back(build_member(strict, cls, opts));
  for (Index a = 0; a < r.size(); ++a)
    for (Index b = a + 1; b < r.size(); ++b) {
      if (strict.contains(a, b) || strict.contains(b, a)) continue;
      for (Pair extra : {Pair{b, a}, Pair{a, b}}) {
        Relation augmented = strict;
        augmented.insert(extra.first, extra.second);
        built.push_back(build_member(augmented, cls, opts));
      }
    }

  std::stable_sort(built.begin(), built.end(),
                   [](const Member& x, const Member& y) { return x.relation < y.relation; });
  built.erase(std::unique(built.begin(), built.end(),
                          [](const Member& x, const Member& y) { return x.relation == y.relation; }),
              built.end());

  Realizer out;
  out.target = target;
  out.member_class = cls;
  for (auto& m : built) {
    out.is_linear.push_back(is_linear_member(m.relation, cls));
    out.members.push_back(std::move(m.relation));
    out.provenance.push_back(std::move(m.provenance));
  }
  if (auto check = verify_realizer(out, opts); !check) {
    throw Error(Errc::InternalOperatorFailure, "constructed realizer failed verification: " + check.detail);
  }
  return out;
}

RealizerCheck verify_realizer(const Relation& target, std::span<const Relation> members, MemberClass cls,
                              const DecomposeOptions& opts) {
  for (const Relation& m : members) require_same_ground_set(target, m);
  if (members.empty()) return {false, "the family is empty"};

  for (std::size_t k = 0; k < members.size(); ++k) {
    if (!member_in_class(members[k], cls, opts)) {
      return {false, "member " + std::to_string(k) + " is not in class " + std::string(to_string(cls))};
    }
    if (!is_extension(target, members[k])) {
      return {false, "member " + std::to_string(k) + " does not extend the target"};
    }
  }

  Relation meet = members.front();
  for (const Relation& m : members.subspan(1)) meet &= m;
  for (auto [a, b] : meet.pairs())
    if (!target.contains(a, b)) return {false, "intersection contains " + pair_text(target, a, b) + " outside the target"};
  for (auto [a, b] : target.pairs())
    if (!meet.contains(a, b)) return {false, "intersection misses " + pair_text(target, a, b)};
  return {};
}

RealizerCheck verify_realizer(const Realizer& z, const DecomposeOptions& opts) {
  auto check = verify_realizer(z.target, z.members, z.member_class, opts);
  if (check && z.is_linear.size() != z.members.size()) return {false, "linearity tags do not match the members"};
  for (std::size_t k = 0; check && k < z.members.size(); ++k) {
    if (z.is_linear[k] != is_linear_member(z.members[k], z.member_class)) {
      return {false, "member " + std::to_string(k) + " has a wrong linearity tag"};
    }
  }
  return check;
}

}  // namespace orderdim
