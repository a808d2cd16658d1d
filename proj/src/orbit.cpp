#include "fbc/orbit.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fbc/budget.hpp"
#include "fbc/fixed_points.hpp"

namespace fbc {

namespace {

OrbitVerdict orbit_yes(const FreeAutomorphism& phi, const Word& u,
                       const Word& v, long long k, Word c, std::string note) {
  Word shifted = power(phi, k).apply(u);
  if (conjugated(shifted, c) != v)
    throw std::logic_error("orbit conjugator failed verification: " + note);
  OrbitVerdict out;
  out.kind = OrbitVerdict::Kind::Yes;
  out.shift = k;
  out.conjugator = std::move(c);
  out.checked = true;
  out.note = std::move(note);
  return out;
}

OrbitVerdict orbit_no(std::string note) {
  OrbitVerdict out;
  out.kind = OrbitVerdict::Kind::No;
  out.note = std::move(note);
  return out;
}

}  // namespace

OrbitVerdict orbit_decide(const FreeAutomorphism& phi, const Word& u,
                          const Word& v, const OrbitOptions& opt) {
  if (u.empty() || v.empty()) {
    if (u.empty() && v.empty())
      return orbit_yes(phi, u, v, 0, Word{}, "both words trivial");
    return orbit_no("only the trivial word is conjugate to it (exact)");
  }

  AutoClass cls = classify(phi);
  if (cls.kind == AutoKind::Identity || cls.kind == AutoKind::Inner) {
    // Inner iterates stay inside one conjugacy class, so the orbit meets the
    // class of v iff u itself does.
    if (auto c = conjugacy(u, v))
      return orbit_yes(phi, u, v, 0, *c, "single conjugacy test");
    return orbit_no("iterates stay in the class of u (exact)");
  }
  if ((cls.kind == AutoKind::LetterPermutation ||
       cls.kind == AutoKind::FiniteOrder) &&
      cls.order > 0) {
    Word cur = u;
    for (int k = 0; k < cls.order; ++k) {
      if (k > 0) cur = phi.apply(cur);
      if (auto c = conjugacy(cur, v))
        return orbit_yes(phi, u, v, k, *c, "finite-order orbit scan");
    }
    return orbit_no("orbit is finite and misses the class of v (exact)");
  }

  const long long limit =
      static_cast<long long>(opt.growth_factor) *
      std::max<long long>({1, static_cast<long long>(u.size()),
                           static_cast<long long>(v.size())});
  Word fwd = u, bwd = u;
  int fwd_oversize = 0, bwd_oversize = 0;
  bool fwd_alive = true, bwd_alive = true;
  if (auto c = conjugacy(u, v))
    return orbit_yes(phi, u, v, 0, *c, "bounded orbit scan");
  try {
    for (int k = 1; k <= opt.range && (fwd_alive || bwd_alive); ++k) {
      if (fwd_alive) {
        fwd = phi.apply(fwd);
        if (auto c = conjugacy(fwd, v))
          return orbit_yes(phi, u, v, k, *c, "bounded orbit scan");
        std::size_t len = cyclic_reduce(fwd).first.size();
        fwd_oversize = len > static_cast<std::size_t>(limit)
                           ? fwd_oversize + 1
                           : 0;
        if (fwd_oversize >= opt.growth_patience) fwd_alive = false;
      }
      if (bwd_alive) {
        bwd = phi.apply_inverse(bwd);
        if (auto c = conjugacy(bwd, v))
          return orbit_yes(phi, u, v, -k, *c, "bounded orbit scan");
        std::size_t len = cyclic_reduce(bwd).first.size();
        bwd_oversize = len > static_cast<std::size_t>(limit)
                           ? bwd_oversize + 1
                           : 0;
        if (bwd_oversize >= opt.growth_patience) bwd_alive = false;
      }
    }
  } catch (const BudgetExceeded&) {
    OrbitVerdict out;
    out.note = "orbit scan exceeded the word budget";
    return out;
  }
  OrbitVerdict out;
  out.note = "orbit scan range " + std::to_string(opt.range) + " exhausted";
  return out;
}

namespace {

PowerOrbitVerdict power_orbit_yes(const FreeAutomorphism& phi, const Word& u,
                                  const Word& v, long long k, long long p,
                                  long long q, Word c, std::string note) {
  Word lhs = conjugated(power(phi, k).apply(u.pow(p)), c);
  if (lhs != v.pow(q))
    throw std::logic_error("power orbit certificate failed verification: " +
                           note);
  PowerOrbitVerdict out;
  out.kind = PowerOrbitVerdict::Kind::Yes;
  out.shift = k;
  out.p = p;
  out.q = q;
  out.conjugator = std::move(c);
  out.checked = true;
  out.note = std::move(note);
  return out;
}

}  // namespace

PowerOrbitVerdict power_orbit_decide(const FreeAutomorphism& phi, const Word& u,
                                     const Word& v, const OrbitOptions& opt) {
  if (u.empty() || v.empty()) {
    if (u.empty() && v.empty())
      return power_orbit_yes(phi, u, v, 0, 1, 1, Word{}, "both words trivial");
    PowerOrbitVerdict out;
    out.kind = PowerOrbitVerdict::Kind::No;
    out.note = "powers of a nontrivial word stay nontrivial (exact)";
    return out;
  }

  auto [ru, a] = root(u);
  auto [rv, b] = root(v);
  long long g = std::gcd(static_cast<long long>(a), static_cast<long long>(b));
  long long p = b / g;

  bool saw_unknown = false;
  std::string notes;
  for (int eps : {1, -1}) {
    Word target = eps == 1 ? rv : rv.inverse();
    OrbitVerdict od = orbit_decide(phi, ru, target, opt);
    if (od.kind == OrbitVerdict::Kind::Yes) {
      long long q = eps * (a / g);
      return power_orbit_yes(phi, u, v, od.shift, p, q, od.conjugator,
                             "root orbit, " + od.note);
    }
    if (od.kind == OrbitVerdict::Kind::Unknown) saw_unknown = true;
    if (!notes.empty()) notes += "; ";
    notes += (eps == 1 ? "root orientation: " : "inverted orientation: ") +
             od.note;
  }

  PowerOrbitVerdict out;
  out.kind = saw_unknown ? PowerOrbitVerdict::Kind::Unknown
                         : PowerOrbitVerdict::Kind::No;
  out.note = notes;
  return out;
}

}  // namespace fbc
