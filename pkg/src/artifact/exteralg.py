"""Exterior algebra over Q with a metric, and the free graded module model
for tempered cohomology: wedge/contraction duality, the long-Weyl twisted
Poincare adjointness, freeness and the isometry property.
"""

from fractions import Fraction
import itertools
import math
import random


class MetricSpaceQ:
 def __init__(self, dim, gram=None):
  self.dim = dim
  if gram is None:
   gram = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
  self.gram = [[Fraction(x) for x in row] for row in gram]
  for i in range(dim):
   for j in range(dim):
    if self.gram[i][j] != self.gram[j][i]:
     raise ValueError("gram matrix must be symmetric")
  for k in range(1, dim + 1):
   if _det([row[:k] for row in self.gram[:k]]) <= 0:
    raise ValueError("gram matrix must be positive definite")

 def __eq__(self, other):
  return isinstance(other, MetricSpaceQ) and self.dim == other.dim and \
      self.gram == other.gram


def _det(m):
 n = len(m)
 m = [row[:] for row in m]
 det = Fraction(1)
 for c in range(n):
  piv = next((r for r in range(c, n) if m[r][c]), None)
  if piv is None:
   return Fraction(0)
  if piv != c:
   m[c], m[piv] = m[piv], m[c]
   det = -det
  det *= m[c][c]
  for r in range(c + 1, n):
   f = m[r][c] / m[c][c]
   if f:
    m[r] = [x - f * y for x, y in zip(m[r], m[c])]
 return det


class ExteriorElement:
 """Element of the exterior algebra, keyed by strictly increasing tuples."""

 def __init__(self, ambient, coeffs=None):
  self.ambient = ambient
  self.coeffs = {}
  if coeffs:
   for idx, c in coeffs.items():
    idx = tuple(idx)
    if list(idx) != sorted(set(idx)):
     raise ValueError("index tuples must be strictly increasing")
    c = Fraction(c)
    if c:
     self.coeffs[idx] = c

 @staticmethod
 def basis(ambient, idx):
  return ExteriorElement(ambient, {tuple(idx): 1})

 def __add__(self, other):
  self._same(other)
  out = dict(self.coeffs)
  for k, c in other.coeffs.items():
   out[k] = out.get(k, Fraction(0)) + c
  return ExteriorElement(self.ambient, out)

 def __sub__(self, other):
  return self + other.scale(-1)

 def scale(self, c):
  return ExteriorElement(self.ambient,
                         {k: v * Fraction(c) for k, v in self.coeffs.items()})

 def _same(self, other):
  if self.ambient != other.ambient:
   raise ValueError("ambient space mismatch")

 def is_zero(self):
  return not self.coeffs

 def degrees(self):
  return sorted({len(k) for k in self.coeffs})

 def __eq__(self, other):
  return isinstance(other, ExteriorElement) and self.ambient == other.ambient \
      and self.coeffs == other.coeffs

 def __repr__(self):
  if not self.coeffs:
   return "0"
  return " + ".join("%s e%s" % (c, "".join(str(i) for i in k))
                    for k, c in sorted(self.coeffs.items()))


def _merge(a, b):
 """Concatenate index tuples, return (sign, sorted tuple) or None."""
 if set(a) & set(b):
  return None
 out = a + b
 sign = 1
 # count inversions of the concatenation
 for i, x in enumerate(out):
  for y in out[i + 1:]:
   if x > y:
    sign = -sign
 return sign, tuple(sorted(out))


def wedge(a, b):
 a._same(b)
 out = {}
 for ka, ca in a.coeffs.items():
  for kb, cb in b.coeffs.items():
   m = _merge(ka, kb)
   if m:
    s, key = m
    out[key] = out.get(key, Fraction(0)) + s * ca * cb
 return ExteriorElement(a.ambient, out)


def contract(x, b):
 """Contraction by a degree-1 functional; a degree -1 derivation."""
 x._same(b)
 for k in x.coeffs:
  if len(k) != 1:
   raise ValueError("contraction needs a degree-1 functional")
 out = {}
 for kb, cb in b.coeffs.items():
  for pos, i in enumerate(kb):
   c = x.coeffs.get((i,))
   if c:
    key = kb[:pos] + kb[pos + 1:]
    out[key] = out.get(key, Fraction(0)) + ((-1) ** pos) * c * cb
 return ExteriorElement(b.ambient, out)


def eval_pairing(a, b):
 """Evaluation pairing between dual and primal elements of equal degree."""
 a._same(b)
 return sum(c * b.coeffs.get(k, Fraction(0)) for k, c in a.coeffs.items())


def induced_inner(a, b):
 """Inner product on the exterior algebra induced by the gram matrix."""
 a._same(b)
 gram = a.ambient.gram
 total = Fraction(0)
 for ka, ca in a.coeffs.items():
  for kb, cb in b.coeffs.items():
   if len(ka) != len(kb):
    continue
   sub = [[gram[i][j] for j in kb] for i in ka]
   total += ca * cb * _det(sub)
 return total


def _rand_elem(ambient, degree, rng):
 out = {}
 for idx in itertools.combinations(range(ambient.dim), degree):
  out[idx] = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
 return ExteriorElement(ambient, out)


def adjointness_check(space, trials, seed=20260823):
 """<X ^ A, B> = <A, X -| B> for the evaluation pairing; exhaustive over
 basis triples, then seeded random trials."""
 d = space.dim
 for da in range(d):
  for i in range(d):
   X = ExteriorElement.basis(space, (i,))
   for A in itertools.combinations(range(d), da):
    Ae = ExteriorElement.basis(space, A)
    for B in itertools.combinations(range(d), da + 1):
     Be = ExteriorElement.basis(space, B)
     if eval_pairing(wedge(X, Ae), Be) != eval_pairing(Ae, contract(X, Be)):
      return False
 rng = random.Random(seed)
 for _ in range(trials):
  da = rng.randrange(d)
  X = _rand_elem(space, 1, rng)
  A = _rand_elem(space, da, rng)
  B = _rand_elem(space, da + 1, rng)
  if eval_pairing(wedge(X, A), B) != eval_pairing(A, contract(X, B)):
   return False
 return True


def model_dims(delta, q, k):
 if delta < 0:
  raise ValueError("delta must be nonnegative")
 return [(q + i, k * math.comb(delta, i)) for i in range(delta + 1)]


class TemperedCohomologyModel:
 """Free graded module over the exterior algebra with k generators in
 degree q and a long-Weyl involution w on the degree-1 part."""

 def __init__(self, delta, q, k, long_weyl=None, gen_matrix=None,
              gram=None):
  self.delta = delta
  self.q = q
  self.k = k
  self.space = MetricSpaceQ(delta, gram)
  if long_weyl is None:
   long_weyl = [[Fraction(int(i == j)) for j in range(delta)]
                for i in range(delta)]
  self.w = [[Fraction(x) for x in row] for row in long_weyl]
  sq = [[sum(self.w[i][l] * self.w[l][j] for l in range(delta))
         for j in range(delta)] for i in range(delta)]
  if sq != [[Fraction(int(i == j)) for j in range(delta)]
            for i in range(delta)]:
   raise ValueError("long Weyl involution must square to the identity")
  if gen_matrix is None:
   gen_matrix = [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]
  self.gen_matrix = [[Fraction(x) for x in row] for row in gen_matrix]

 # module elements: dict (gen index, subset tuple) -> Fraction
 def basis_elems(self, degree):
  i = degree - self.q
  if i < 0 or i > self.delta:
   return []
  return [(g, s) for g in range(self.k)
          for s in itertools.combinations(range(self.delta), i)]

 def generator(self, g):
  """Image of abstract generator g under the generator matrix."""
  return {(i, ()): self.gen_matrix[i][g] for i in range(self.k)
          if self.gen_matrix[i][g]}

 def act(self, f, x):
  """Right action of an exterior element on a module element."""
  out = {}
  for (g, s), c in f.items():
   se = ExteriorElement(self.space, {s: c})
   for key, cc in wedge(se, x).coeffs.items():
    out[(g, key)] = out.get((g, key), Fraction(0)) + cc
  return {k: v for k, v in out.items() if v}

 def apply_w(self, x):
  """Extend the long-Weyl map multiplicatively to the exterior algebra."""
  out = ExteriorElement(self.space, {})
  for s, c in x.coeffs.items():
   term = ExteriorElement(self.space, {(): c})
   for i in s:
    img = ExteriorElement(self.space,
                          {(j,): self.w[j][i] for j in range(self.delta)
                           if self.w[j][i]})
    term = wedge(term, img)
   out = out + term
  return out

 def pairing(self, f1, f2):
  """Top-degree pairing with the w twist folded into the second slot."""
  total = Fraction(0)
  top = tuple(range(self.delta))
  for (g1, s1), c1 in f1.items():
   for (g2, s2), c2 in f2.items():
    if g1 != g2:
     continue
    e2 = self.apply_w(ExteriorElement(self.space, {s2: Fraction(1)}))
    prod = wedge(ExteriorElement(self.space, {s1: Fraction(1)}), e2)
    total += c1 * c2 * prod.coeffs.get(top, Fraction(0))
  return total

 def module_inner(self, f1, f2):
  """Metric with orthonormal generators and the induced exterior metric."""
  total = Fraction(0)
  for (g1, s1), c1 in f1.items():
   for (g2, s2), c2 in f2.items():
    if g1 != g2 or len(s1) != len(s2):
     continue
    total += c1 * c2 * induced_inner(
        ExteriorElement(self.space, {s1: Fraction(1)}),
        ExteriorElement(self.space, {s2: Fraction(1)}))
  return total


def freeness_check(model):
 """Wedge from degree-q generators tensor degree-i exterior basis must hit
 a basis of each graded piece."""
 for i in range(model.delta + 1):
  cols = []
  target = model.basis_elems(model.q + i)
  index = {b: t for t, b in enumerate(target)}
  for g in range(model.k):
   gen = model.generator(g)
   for s in itertools.combinations(range(model.delta), i):
    img = model.act(gen, ExteriorElement(model.space, {s: Fraction(1)}))
    col = [Fraction(0)] * len(target)
    for key, c in img.items():
     col[index[key]] = c
    cols.append(col)
  if len(cols) != len(target):
   return False
  if _det([[cols[c][r] for c in range(len(cols))]
           for r in range(len(target))]) == 0:
   return False
 return True


def poincare_adjoint_check(model, signed=True):
 """<f1 . X, f2> = +- <f1, (wX) . f2> over all basis triples.

 The exact sign in our conventions is (-1)^(deg f2 - q); the unsigned
 comparison is convention-free.  Checks both.
 """
 d = model.delta
 for d1 in range(d):
  d2 = d - 1 - d1
  for g in range(model.k):
   for s1 in itertools.combinations(range(d), d1):
    f1 = {(g, s1): Fraction(1)}
    for r in range(d):
     X = ExteriorElement.basis(model.space, (r,))
     wX = model.apply_w(X)
     for s2 in itertools.combinations(range(d), d2):
      f2 = {(g, s2): Fraction(1)}
      lhs = model.pairing(model.act(f1, X), f2)
      rhs = model.pairing(f1, model.act(f2, wX))
      if abs(lhs) != abs(rhs):
       return False
      if signed and lhs != ((-1) ** len(s2)) * rhs:
       return False
 return True


def isometry_check(model, trials=50, seed=20260823):
 """Multiplication from the generator degree scales norms exactly:
 |omega.nu|^2 / |omega|^2 = |nu|^2 for omega spanned by the generators."""
 rng = random.Random(seed)
 cases = []
 for i in range(model.delta + 1):
  for s in itertools.combinations(range(model.delta), i):
   cases.append((None, ExteriorElement(model.space, {s: Fraction(1)})))
 for _ in range(trials):
  deg = rng.randrange(model.delta + 1)
  cases.append((None, _rand_elem(model.space, deg, rng)))
 for _, nu in cases:
  if nu.is_zero():
   continue
  for trial in range(3):
   om = {(g, ()): Fraction(rng.randint(-5, 5)) for g in range(model.k)}
   om = {k: v for k, v in om.items() if v}
   if not om:
    continue
   n_om = model.module_inner(om, om)
   prod = model.act(om, nu)
   n_prod = model.module_inner(prod, prod)
   n_nu = induced_inner(nu, nu)
   if n_prod != n_om * n_nu:
    return False
 return True
