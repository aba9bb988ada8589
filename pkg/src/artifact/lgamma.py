"""Archimedean L-factors as formal Gamma-products, exact leading-coefficient
extraction modulo rational scalars, and the per-case comparison of every
computed pi-exponent against its closed-form target.
"""

from fractions import Fraction

from . import rootsys
from .periodring import PeriodScalar, _canon_case
from . import hodge


class GammaProduct:
 """Finitely supported product of Gamma_R / Gamma_C factors.

 Keys are (kind, a) with kind in {"R", "C"}, standing for Gamma_kind(s+a);
 values are integer multiplicities (negative allowed for ratios).
 """

 def __init__(self, factors=None):
  self.factors = {}
  if factors:
   for (kind, a), m in factors.items():
    if kind not in ("R", "C"):
     raise ValueError("unknown factor kind %r" % (kind,))
    if m:
     self.factors[(kind, a)] = self.factors.get((kind, a), 0) + m

 def __mul__(self, other):
  out = dict(self.factors)
  for k, m in other.factors.items():
   out[k] = out.get(k, 0) + m
  return GammaProduct(out)

 def __pow__(self, e):
  return GammaProduct({k: m * e for k, m in self.factors.items()})

 def __truediv__(self, other):
  return self * (other ** -1)

 def __eq__(self, other):
  return isinstance(other, GammaProduct) and self.factors == other.factors

 def __repr__(self):
  if not self.factors:
   return "1"
  bits = []
  for (kind, a), m in sorted(self.factors.items()):
   arg = "s" if a == 0 else ("s%+d" % a)
   bits.append("Gamma_%s(%s)^%d" % (kind, arg, m))
  return " ".join(bits)


def l_infinity(h):
 """Archimedean L-factor of a Hodge structure: Gamma_C(s-p) for each
 conjugate pair p < q, Gamma_R(s-p)^{f+} Gamma_R(s-p+1)^{f-} on the
 diagonal."""
 out = {}
 for (p, q), m in h.mult.items():
  if p < q:
   out[("C", -p)] = out.get(("C", -p), 0) + m
 if h.weight % 2 == 0:
  p = h.weight // 2
  if h.fplus:
   out[("R", -p)] = out.get(("R", -p), 0) + h.fplus
  if h.fminus:
   out[("R", -p + 1)] = out.get(("R", -p + 1), 0) + h.fminus
 return GammaProduct(out)


def leading_coeff(g, s0):
 """Leading Taylor coefficient at the integer s0, mod rational scalars.

 Gamma_C(k) carries pi^{-k} for every integer k (at poles the residue is
 rational); Gamma_R(k) carries pi^{-floor(k/2)}, tracking the half powers
 of pi exactly."""
 exp = Fraction(0)
 for (kind, a), m in g.factors.items():
  k = s0 + a
  if kind == "C":
   exp -= m * k
  else:
   exp -= m * (k // 2)
 return PeriodScalar.gen("pi", exp)


def pi_exponent(ps):
 """Exponent of pi in a pure pi-power scalar."""
 for g, e in ps.exps.items():
  if g != "pi" and e:
   raise ValueError("not a pure power of pi: %r" % (ps,))
 return ps.exps.get("pi", Fraction(0))


def gamma_consistency(m):
 if m < 1:
  raise ValueError("m must be positive")
 return sum(i * (m + 1 - i) for i in range(1, m + 1)) == \
     m * (m + 1) * (m + 2) // 6


def _gc(*args):
 """Gamma_C at the given fixed integer arguments (as a constant product)."""
 out = {}
 for a in args:
  out[("C", a)] = out.get(("C", a), 0) + 1
 return GammaProduct(out)


def _gr(*args):
 out = {}
 for a in args:
  out[("R", a)] = out.get(("R", a), 0) + 1
 return GammaProduct(out)


def case_group_descriptors(case, n):
 """(G, H) real-group descriptor strings for the case family."""
 case = _canon_case(case)
 if case == "pgl-q":
  g = " x ".join(["PGL(%d)/R" % n, "PGL(%d)/R" % (n + 1)] * 2)
  return g, "GL(%d)/R x GL(%d)/R" % (n, n)
 if case == "pgl-e":
  return "PGL(%d)/C x PGL(%d)/C" % (n, n + 1), "GL(%d)/C" % n
 if case == "so-even":
  return "SO(%d)/C x SO(%d)/C" % (2 * n, 2 * n + 1), "SO(%d)/C" % (2 * n)
 return "SO(%d)/C x SO(%d)/C" % (2 * n + 1, 2 * n + 2), \
     "SO(%d)/C" % (2 * n + 1)


def discriminant_factors(case, n):
 """(Delta_G, Delta_H) archimedean discriminant Gamma-products."""
 case = _canon_case(case)
 if case == "pgl-q":
  dg = (_gr(*range(2, n + 1)) ** 4) * (_gr(n + 1) ** 2)
  dh = _gr(*range(1, n + 1)) ** 2
 elif case == "pgl-e":
  dg = (_gc(*range(2, n + 1)) ** 2) * _gc(n + 1)
  dh = _gc(*range(1, n + 1))
 elif case == "so-even":
  dg = (_gc(*(2 * i for i in range(1, n))) ** 2) * _gc(n) * _gc(2 * n)
  dh = _gc(*(2 * i for i in range(1, n))) * _gc(n)
 else:
  dg = (_gc(*(2 * i for i in range(1, n + 1))) ** 2) * _gc(n + 1)
  dh = _gc(*(2 * i for i in range(1, n + 1)))
 return dg, dh


def _doubled(case, h):
 """Pass from one factor pair to the full real group: restriction of
 scalars for the imaginary-quadratic cases, a plain second copy for the
 squared split case."""
 if h.over_e:
  return hodge.restrict_scalars(h)
 return hodge.HodgeStructure(h.weight,
                             {k: 2 * m for k, m in h.mult.items()},
                             fplus=2 * h.fplus, fminus=2 * h.fminus)


def tensor_structure(case, n):
 m = hodge.standard_motive(case, n, "M")
 nn = hodge.standard_motive(case, n, "N")
 return hodge.tensor(m, nn)


def adjoint_structure(case, n):
 adm = hodge.case_adjoint(case, n, "M")
 adn = hodge.case_adjoint(case, n, "N")
 mult = dict(adm.mult)
 for k, v in adn.mult.items():
  mult[k] = mult.get(k, 0) + v
 if adm.over_e:
  return hodge.HodgeStructure(0, mult, over_e=True)
 return hodge.HodgeStructure(0, mult, fplus=adm.fplus + adn.fplus,
                             fminus=adm.fminus + adn.fminus)


def _expected(case, n):
 case = _canon_case(case)
 if case == "pgl-q":
  dk = 2 * n - 2 * (n // 2)
  dg = 2 * ((n // 2) - n)
  rho = -Fraction(2, 3) * n * (n + 1) * (n + 2)
  ad = -Fraction(1, 3) * n * (n + 1) * (2 * n + 1)
 elif case == "pgl-e":
  dk = n - 1
  dg = 1 - n
  rho = -Fraction(2, 3) * n * (n + 1) * (n + 2)
  ad = -Fraction(1, 3) * n * (n + 1) * (2 * n + 1)
 elif case == "so-even":
  dk = n
  dg = -n
  rho = -Fraction(1, 3) * (2 * n - 1) * 2 * n * (2 * n + 1) - n * (n + 1)
  ad = -Fraction(8, 3) * (n - 1) * n * (n + 1) + n * n - 3 * n
 else:
  dk = n + 1
  dg = -(n + 1)
  rho = -Fraction(1, 3) * 2 * n * (2 * n + 1) * (2 * n + 2) - n * (n + 1)
  ad = -Fraction(4, 3) * n * (n + 1) * (2 * n + 1) + n * (n + 1)
 return {"compact_volume_ratio": Fraction(dk),
         "discriminant_ratio": Fraction(dg),
         "rho_at_center": Fraction(rho),
         "adjoint_at_zero": Fraction(ad),
         "ratio": Fraction(rho) - Fraction(ad)}


def table1_row(case, n):
 """Compute all five exponent columns from first principles and compare
 each against its closed-form target."""
 case = _canon_case(case)
 if n < 1:
  raise ValueError("n must be positive")
 desc = hodge.CaseDescriptor(case, n)
 expected = _expected(case, n)
 computed = {}

 gdesc, hdesc = case_group_descriptors(case, n)
 gi = rootsys.invariants(gdesc)
 hi = rootsys.invariants(hdesc)
 computed["compact_volume_ratio"] = \
     Fraction(gi.d_K + gi.r_K, 2) - Fraction(hi.d_K + hi.r_K)

 dg, dh = discriminant_factors(case, n)
 computed["discriminant_ratio"] = pi_exponent(
     leading_coeff(dg / (dh ** 2), 0))

 tens = _doubled(case, tensor_structure(case, n))
 computed["rho_at_center"] = desc.e * pi_exponent(
     leading_coeff(l_infinity(tens), desc.r))

 adj = _doubled(case, adjoint_structure(case, n))
 computed["adjoint_at_zero"] = pi_exponent(
     leading_coeff(l_infinity(adj), 0))

 computed["ratio"] = computed["rho_at_center"] - computed["adjoint_at_zero"]

 rows = []
 for name in ("compact_volume_ratio", "discriminant_ratio", "rho_at_center",
              "adjoint_at_zero", "ratio"):
  rows.append({"name": name,
               "computed_exp": computed[name],
               "expected_exp": expected[name],
               "pass": computed[name] == expected[name]})
 return rows
