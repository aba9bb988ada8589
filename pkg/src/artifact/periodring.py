"""Exact arithmetic with period scalars modulo rational square classes.

A scalar is a finite product of formal generators raised to rational
exponents.  Distinguished generators:

  pi           the real number pi
  twopii       the scalar 2*pi*i
  i            sqrt(-1)
  sqrtD        sqrt(D) for the fixed positive rational D (so sqrt(-D) = i*sqrtD)
  sqrtdisc.<x> square root of a named nonzero rational
  <name>       a free indeterminate, fixed by conjugation (reserved for
               quantities known to be real or of rational square class)
  <name>.s / <name>.sb
               the two complex embeddings of an indeterminate; conjugation
               swaps them.

Triviality modulo Q* or sqrt(Q*) is decided by integer lattice reduction
against a declared relation set, so the orientation in which each relation
is written never matters.
"""

from fractions import Fraction


class PeriodScalar:
 """Formal product of generators with Fraction exponents."""

 def __init__(self, exps=None):
  self.exps = {}
  if exps:
   for g, e in exps.items():
    e = Fraction(e)
    if e:
     self.exps[g] = e
  self._normalize()

 def _normalize(self):
  # i has order 4
  e = self.exps.get("i")
  if e is not None:
   e = e - 4 * (e / 4).__floor__()
   if e:
    self.exps["i"] = e
   else:
    del self.exps["i"]

 @staticmethod
 def one():
  return PeriodScalar()

 @staticmethod
 def gen(name, exp=1):
  return PeriodScalar({name: Fraction(exp)})

 def __mul__(self, other):
  out = dict(self.exps)
  for g, e in other.exps.items():
   out[g] = out.get(g, Fraction(0)) + e
  return PeriodScalar(out)

 def __truediv__(self, other):
  return self * other ** -1

 def __pow__(self, k):
  k = Fraction(k)
  return PeriodScalar({g: e * k for g, e in self.exps.items()})

 def conj(self):
  """Complex conjugate.  conj(2pi i) = i^2 * 2pi i, embeddings swap."""
  out = {}
  for g, e in self.exps.items():
   if g.endswith(".s"):
    out[g[:-2] + ".sb"] = out.get(g[:-2] + ".sb", Fraction(0)) + e
   elif g.endswith(".sb"):
    out[g[:-3] + ".s"] = out.get(g[:-3] + ".s", Fraction(0)) + e
   elif g == "i":
    out["i"] = out.get("i", Fraction(0)) - e
   else:
    out[g] = out.get(g, Fraction(0)) + e
  # each twopii carries one i
  t = self.exps.get("twopii")
  if t:
   out["i"] = out.get("i", Fraction(0)) + 2 * t
  return PeriodScalar(out)

 def is_one(self):
  return not self.exps

 def __eq__(self, other):
  return isinstance(other, PeriodScalar) and self.exps == other.exps

 def __hash__(self):
  return hash(frozenset(self.exps.items()))

 def __repr__(self):
  if not self.exps:
   return "1"
  parts = []
  for g in sorted(self.exps):
   e = self.exps[g]
   parts.append(g if e == 1 else "%s^%s" % (g, e))
  return "*".join(parts)


# generators that are automatically of rational square class
def _auto_sqrt_class(g):
 return g == "i" or g == "sqrtD" or g.startswith("sqrtdisc.")


class RelationSet:
 """Declared multiplicative relations among period generators.

 Each relation (x, level) asserts x ~ 1 modulo Q* (level "Q") or modulo
 sqrt(Q*) (level "sqrtQ").  The set is closed under complex conjugation on
 construction.  rational_gens lists indeterminates known to be rational.
 """

 def __init__(self, relations=(), rational_gens=()):
  self.relations = []
  seen = set()
  for x, level in relations:
   if level not in ("Q", "sqrtQ"):
    raise ValueError("unknown relation level: %r" % (level,))
   for y in (x, x.conj()):
    key = (frozenset(y.exps.items()), level)
    if key not in seen:
     seen.add(key)
     self.relations.append((y, level))
  self.rational_gens = tuple(rational_gens)


def _column_order(gens):
 """Eliminable generators first, pi and twopii pinned last."""
 def rank(g):
  if g == "pi":
   return (3, g)
  if g == "twopii":
   return (4, g)
  if g == "i":
   return (2, g)
  if g == "sqrtD" or g.startswith("sqrtdisc."):
   return (1, g)
  return (0, g)
 return sorted(gens, key=rank)


def _to_int_vector(x, cols, scale=2):
 v = []
 for g in cols:
  e = x.exps.get(g, Fraction(0)) * scale
  if e.denominator != 1:
   raise ValueError("exponent denominator beyond 2 not supported: %r" % (x,))
  v.append(int(e))
 return v


def _hnf(rows, ncols):
 """Row-style Hermite form of the integer row span. Returns echelon rows."""
 work = [r[:] for r in rows if any(r)]
 basis = []
 for c in range(ncols):
  hit = [r for r in work if r[c]]
  rest = [r for r in work if not r[c]]
  if not hit:
   continue
  while len(hit) > 1:
   hit.sort(key=lambda r: abs(r[c]))
   piv = hit[0]
   nxt = []
   for r in hit[1:]:
    q = r[c] // piv[c]
    for k in range(ncols):
     r[k] -= q * piv[k]
    if r[c]:
     nxt.append(r)
    elif any(r):
     rest.append(r)
   hit = [piv] + nxt
  piv = hit[0]
  if piv[c] < 0:
   piv = [-x for x in piv]
  basis.append((c, piv))
  work = rest
 return basis


class InconsistentRelations(ValueError):
 pass


def reduce(x, rels, mod="Q"):
 """Canonical residue of x against the relation set, mod Q* or sqrt(Q*).

 Returns a PeriodScalar; the empty product means x is trivial at the
 requested level.  Raises InconsistentRelations if the relations force a
 multiplicative relation between powers of pi and 2*pi*i themselves.
 """
 if mod not in ("Q", "sqrtQ"):
  raise ValueError("mod must be 'Q' or 'sqrtQ'")
 gens = set(x.exps)
 for r, _lev in rels.relations:
  gens.update(r.exps)
 gens.update(rels.rational_gens)
 gens.update(["i"])
 cols = _column_order(gens)
 idx = {g: k for k, g in enumerate(cols)}
 n = len(cols)

 # all vectors live at doubled scale (exponent 1/2 -> entry 1)
 lattice = []
 for r, lev in rels.relations:
  v = _to_int_vector(r, cols)
  if mod == "Q":
   # x ~ 1 mod Q* contributes x itself; x ~ 1 mod sqrt(Q*) only x^2
   mult = 2 if lev == "Q" else 4
  else:
   # mod sqrt(Q*), square roots of Q*-trivial scalars are trivial too
   mult = 1 if lev == "Q" else 2
  if mult == 1 and any(a % 2 for a in v):
   raise ValueError("half-integral relation exponents are not supported")
  lattice.append([a * mult // 2 for a in v])
 # unit-type generators
 for g in cols:
  base = None
  if _auto_sqrt_class(g):
   base = 2  # g^2 rational
  elif g in rels.rational_gens:
   base = 1  # g rational
  if base is not None:
   v = [0] * n
   # doubled scale: exponent e of g is stored as 2e; g^base trivial mod Q
   v[idx[g]] = 2 * base if mod == "Q" else base
   lattice.append(v)

 basis = _hnf(lattice, n)
 for c, row in basis:
  if cols[c] in ("pi", "twopii"):
   raise InconsistentRelations(
    "relation set forces a rational relation among pi powers: " +
    "*".join("%s^%d" % (cols[k], row[k]) for k in range(n) if row[k]))

 t = _to_int_vector(x, cols)
 for c, row in basis:
  q = t[c] // row[c]
  if q:
   for k in range(n):
    t[k] -= q * row[k]
 return PeriodScalar({cols[k]: Fraction(t[k], 2) for k in range(n) if t[k]})


def is_trivial(x, rels, mod="Q"):
 return reduce(x, rels, mod).is_one()


# ---------------------------------------------------------------------------
# case data for the four rank families
#
# Indeterminate names: Qp / Rq are period ratios of the two factors, dM /
# dMpsi / dN are period determinants, cMp/cMm/cNp/cNm are the two period
# minors of the odd-weight factor, detA/detB are de Rham comparison
# determinants, Delta / Xi are the discriminant and unitary part of the
# orthogonal Gram determinant.

CASES = ("pgl-q", "pgl-e", "so-even", "so-odd")


def _canon_case(case):
 c = str(case).replace("_", "-").lower()
 alias = {"pgl-q": "pgl-q", "pglq": "pgl-q", "pgl-e": "pgl-e", "pgle": "pgl-e",
          "so-even": "so-even", "so-even-e": "so-even", "soeven": "so-even",
          "so-odd": "so-odd", "so-odd-e": "so-odd", "soodd": "so-odd"}
 if c not in alias:
  raise ValueError("unknown case: %r" % (case,))
 return alias[c]


def cancellation_exponent(case, n):
 """Exponent m of (2 pi i)^m expected from the full cancellation."""
 case = _canon_case(case)
 if case in ("pgl-q", "pgl-e"):
  return n * (n + 1)
 if case == "so-even":
  return 2 * n * n
 return 2 * n * (n + 1)


def case_relations(case, n):
 case = _canon_case(case)
 g = PeriodScalar.gen
 rels = []
 if case == "pgl-q":
  j = n - 1
  t = j // 2
  for p in range(j + 1):
   if p < j - p:
    rels.append((g("Q%d" % p) * g("Q%d" % (j - p)) * g("i", 2 * j), "Q"))
  if j % 2 == 0:
   rels.append((g("Q%d" % t), "Q"))  # real middle eigenvector
  for q in range(j + 2):
   if q < j + 1 - q:
    rels.append((g("R%d" % q) * g("R%d" % (j + 1 - q)) * g("i", 2 * (j + 1)),
                 "Q"))
  if (j + 1) % 2 == 0:
   rels.append((g("R%d" % ((j + 1) // 2)), "Q"))
  rels.append((g("dM", 2) * g("twopii", j * (j + 1)), "Q"))
  rels.append((g("dMpsi", 2) * g("twopii", j * (j + 1)), "Q"))
  rels.append((g("dN", 2) * g("twopii", (j + 1) * (j + 2)), "Q"))
  if j % 2 == 0:
   x = g("cNp") * g("cNm") * g("dN", -1)
   for q in range(t + 1):
    x = x * g("R%d" % q)
   rels.append((x, "Q"))
  else:
   x = g("cMp") * g("cMm") * g("dM", -1)
   for p in range(t + 1):
    x = x * g("Q%d" % p)
   rels.append((x, "Q"))
  return RelationSet(rels)
 if case == "pgl-e":
  j = n - 1
  for p in range(j + 1):
   rels.append((g("Q%d.sb" % p) * g("Q%d.s" % (j - p)) * g("i", 2 * j), "Q"))
  for q in range(j + 2):
   rels.append((g("R%d.sb" % q) * g("R%d.s" % (j + 1 - q)) *
                g("i", 2 * (j + 1)), "Q"))
  x = g("detA", 2) * g("twopii", j * (j + 1))
  for p in range(j + 1):
   x = x * g("Q%d.s" % p, -1)
  rels.append((x, "Q"))
  x = g("detB", 2) * g("twopii", (j + 1) * (j + 2))
  for q in range(j + 2):
   x = x * g("R%d.s" % q, -1)
  rels.append((x, "Q"))
  return RelationSet(rels)
 # orthogonal cases
 rels.append((g("Delta.s") * g("Delta.sb"), "Q"))
 rels.append((g("Xi.s") * g("Xi.sb"), "Q"))
 rels.append((g("Xi.s", 2) * g("Delta.s") * g("Delta.sb", -1), "Q"))
 rels.append((g("detB", 2) * g("twopii", 2 * n * (2 * n - 1)), "Q"))
 if case == "so-even":
  rels.append((g("detA", 2) * g("Delta.s") * g("twopii", 2 * n * (2 * n - 2)),
               "Q"))
 else:
  rels.append((g("detA", 2) * g("Delta.s") * g("twopii", 2 * n * (2 * n + 2)),
               "Q"))
 return RelationSet(rels, rational_gens=[x for k in range(2 * n + 2)
                                         for x in ("Q%d" % k, "R%d" % k)])


def vol_L(case, n, which):
 """Lattice volume of the Betti realization, as a period scalar."""
 case = _canon_case(case)
 if which not in ("M", "N"):
  raise ValueError("which must be 'M' or 'N'")
 g = PeriodScalar.gen
 out = PeriodScalar.one()
 if case == "pgl-q":
  j = n - 1
  rng = range(j + 1) if which == "M" else range(j + 2)
  for p in rng:
   out = out * g(("Q%d" if which == "M" else "R%d") % p, p)
  return out
 if case == "pgl-e":
  j = n - 1
  rng = range(j + 1) if which == "M" else range(j + 2)
  nm = "Q%d" if which == "M" else "R%d"
  for p in rng:
   out = out * g(nm % p + ".s", p) * g(nm % p + ".sb", p)
  return out
 if case == "so-even":
  if which == "N":
   out = g("sqrtD", n * n)
   for q in range(n):
    out = out * g("R%d" % q, -(2 * n - 2 * q))
   return out
  out = g("sqrtD", n * n - n)
  for p in range(n - 1):
   out = out * g("Q%d" % p, -(2 * n - 2 - 2 * p))
  return out * g("Delta.s", n - 1) * g("Xi.s", n - 1)
 # so-odd: N is the odd orthogonal factor of rank 2n+1, M has rank 2n+2
 if which == "N":
  out = g("sqrtD", n * n)
  for q in range(n):
   out = out * g("R%d" % q, -(2 * n - 2 * q))
  return out
 for p in range(n):
  out = out * g("Q%d" % p, -(2 * n - 2 * p))
 return out * g("Delta.s", n) * g("Xi.s", n)


def beilinson_volume(lstar, volHB, volF1):
 """Motivic-cohomology volume rewrite: lstar * volHB / volF1."""
 return lstar * volHB / volF1


def pair_volume(case, n):
 return vol_L(case, n, "M") * vol_L(case, n, "N")


def deligne_c(case, n, sign=1, psi=False):
 """Deligne period of the centrally twisted tensor motive.

 sign picks c^+ or c^-; psi applies the quadratic twist to the first
 factor (pgl-q only).
 """
 case = _canon_case(case)
 if sign not in (1, -1):
  raise ValueError("sign must be +1 or -1")
 if psi and case != "pgl-q":
  raise ValueError("quadratic twist only applies to pgl-q")
 g = PeriodScalar.gen
 if case == "pgl-q":
  j = n - 1
  t = j // 2
  schi = -1 if psi else 1
  dX = "dMpsi" if psi else "dM"
  out = g("twopii", Fraction((j + 1) * (j + 1) * (j + 2), 2))
  if j % 2 == 0:
   out = out * g(dX, t + 1) * g("dN", t)
   for p in range(t):
    out = out * g("Q%d" % p, p - t)
   for q in range(t + 1):
    out = out * g("R%d" % q, q - t)
   # the odd Tate twist flips the Betti sign of the trailing minor
   out = out * g("cNp" if -sign * schi > 0 else "cNm")
  else:
   out = out * g(dX, t + 1) * g("dN", t + 1)
   for p in range(t + 1):
    out = out * g("Q%d" % p, p - t)
   for q in range(t + 1):
    out = out * g("R%d" % q, q - t - 1)
   # the trailing minor keeps the target sign; the twisted minor equals the
   # opposite-sign untwisted one up to a Gauss power of i
   if psi:
    out = out * g("cMp" if sign < 0 else "cMm") * g("i", -(t + 1))
   else:
    out = out * g("cMp" if sign > 0 else "cMm")
  return out
 if case == "pgl-e":
  j = n - 1
  out = g("twopii", (j + 1) * (j + 1) * (j + 2))
  out = out * (g("i") * g("sqrtD")) ** Fraction(-(j + 1) * (j + 2), 2)
  for p in range(j + 1):
   out = out * g("Q%d.s" % p, -(j + 1 - p))
  for q in range(j + 2):
   out = out * g("R%d.s" % q, -(j + 1 - q))
  return out * g("detA", j + 2) * g("detB", j + 1)
 if case == "so-even":
  out = g("twopii", 4 * n * n * (2 * n - 1))
  out = out * (g("i") * g("sqrtD")) ** (-2 * n * n)
  for p in range(n - 1):
   out = out * g("Q%d" % p, -(2 * n - 2 - 2 * p))
  for q in range(n):
   out = out * g("R%d" % q, -(2 * n - 2 * q))
  return out * g("Xi.s", -n) * g("detA", 2 * n) * g("detB", 2 * n)
 out = g("twopii", 4 * n * n * (2 * n + 2))
 out = out * (g("i") * g("sqrtD")) ** (-2 * n * (n + 1))
 for p in range(n):
  out = out * g("Q%d" % p, -(2 * n - 2 * p))
 for q in range(n):
  out = out * g("R%d" % q, -(2 * n - 2 * q))
 return out * g("Xi.s", -n) * g("detA", 2 * n) * g("detB", 2 * n + 2)


def condensate(case, n, sign=1):
 """The full period ratio that the cancellation theorems evaluate.

 For the rational pair this is the product over both quadratic twists of
 c^2 / (vol_M vol_N); for the imaginary quadratic pairs it is c^2/(vol vol)
 or c/(vol vol) depending on whether the central value is a square.
 """
 case = _canon_case(case)
 vv = pair_volume(case, n)
 if case == "pgl-q":
  num = (deligne_c(case, n, sign) ** 2) * (deligne_c(case, n, sign, psi=True) ** 2)
  return num / vv ** 2
 if case == "pgl-e":
  return deligne_c(case, n, sign) ** 2 / vv
 return deligne_c(case, n, sign) / vv


def condensate_residual(case, n, sign=1):
 """Residual of condensate/(2 pi i)^m; empty means the identity holds."""
 case = _canon_case(case)
 m = cancellation_exponent(case, n)
 x = condensate(case, n, sign) * PeriodScalar.gen("twopii", -m)
 mod = "Q" if case == "pgl-q" else "sqrtQ"
 return reduce(x, case_relations(case, n), mod)


# ---------------------------------------------------------------------------
# tiny s-expression front end for the CLI

def parse_expr(text):
 """Parse '(mul (pow twopii 3) (conj Q0.s))' style expressions."""
 toks = text.replace("(", " ( ").replace(")", " ) ").split()
 pos = [0]

 def atom(tok):
  return PeriodScalar.gen(tok)

 def read():
  if pos[0] >= len(toks):
   raise ValueError("unexpected end of expression")
  tok = toks[pos[0]]
  pos[0] += 1
  if tok == ")":
   raise ValueError("unexpected ')'")
  if tok != "(":
   return atom(tok)
  op = toks[pos[0]]
  pos[0] += 1
  args = []
  while toks[pos[0]] != ")":
   if op == "pow" and len(args) == 1:
    args.append(Fraction(toks[pos[0]]))
    pos[0] += 1
   else:
    args.append(read())
  pos[0] += 1
  if op == "mul":
   out = PeriodScalar.one()
   for a in args:
    out = out * a
   return out
  if op == "pow":
   if len(args) != 2:
    raise ValueError("pow takes a base and a rational exponent")
   return args[0] ** args[1]
  if op == "conj":
   if len(args) != 1:
    raise ValueError("conj takes one argument")
   return args[0].conj()
  raise ValueError("unknown operator: %r" % (op,))

 out = read()
 if pos[0] != len(toks):
  raise ValueError("trailing tokens in expression")
 return out
