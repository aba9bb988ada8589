"""Hodge structure algebra: constructors, functorial operations, and
agreement with independent brute-force basis-counting oracles."""

import itertools

import pytest

from artifact import hodge as hg
from artifact.periodring import CASES


# ---------------------------------------------------------------------------
# brute-force oracles: expand an explicit labeled basis and count

def _basis(h):
 out = []
 for (p, q), m in sorted(h.mult.items()):
  for c in range(m):
   out.append((p, q, c))
 return out


def oracle_tensor(a, b):
 tally = {}
 for (p, q, _) in _basis(a):
  for (pp, qq, _) in _basis(b):
   key = (p + pp, q + qq)
   tally[key] = tally.get(key, 0) + 1
 return tally


def oracle_square(a, anti):
 """Sym^2 or Lambda^2 multiplicities by explicit pair counting."""
 bas = _basis(a)
 tally = {}
 for i, x in enumerate(bas):
  start = i + 1 if anti else i
  for y in bas[start:]:
   key = (x[0] + y[0], x[1] + y[1])
   tally[key] = tally.get(key, 0) + 1
 return tally


def oracle_linear_adjoint(a):
 tally = oracle_tensor(a, hg.dual(a))
 tally[(0, 0)] -= 1
 return {k: v for k, v in tally.items() if v}


def _mults(h):
 return dict(h.mult)


class TestConstructors:
 def test_pgl2_standard(self):
  m = hg.standard_motive("pgl-q", 2, "M")
  assert _mults(m) == {(1, 0): 1, (0, 1): 1}

 def test_so4_standard(self):
  m = hg.standard_motive("so-even", 2, "M")
  assert _mults(m) == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
  assert m.over_e

 def test_so5_standard(self):
  n = hg.standard_motive("so-even", 2, "N")
  assert _mults(n) == {(3, 0): 1, (2, 1): 1, (1, 2): 1, (0, 3): 1}

 def test_ranks(self):
  for n in range(1, 9):
   assert hg.standard_motive("pgl-q", n, "M").rank() == n
   assert hg.standard_motive("pgl-q", n, "N").rank() == n + 1
   assert hg.standard_motive("so-even", n, "M").rank() == 2 * n
   assert hg.standard_motive("so-even", n, "N").rank() == 2 * n
   assert hg.standard_motive("so-odd", n, "M").rank() == 2 * n + 2
   assert hg.standard_motive("so-odd", n, "N").rank() == 2 * n

 def test_psi_flips_diagonal_sign(self):
  m = hg.standard_motive("pgl-q", 3, "M")
  mpsi = hg.standard_motive("pgl-q", 3, "M", psi=True)
  assert (m.fplus, m.fminus) == (1, 0)
  assert (mpsi.fplus, mpsi.fminus) == (0, 1)

 def test_bad_inputs(self):
  with pytest.raises(ValueError):
   hg.standard_motive("pgl-q", 0, "M")
  with pytest.raises(ValueError):
   hg.standard_motive("pgl-q", 2, "X")
  with pytest.raises(ValueError):
   hg.HodgeStructure(1, {(1, 0): 1})  # breaks conjugation symmetry


class TestOperations:
 def test_tensor_example(self):
  t = hg.tensor(hg.standard_motive("pgl-q", 2, "M"),
                hg.standard_motive("pgl-q", 2, "N"))
  assert _mults(t) == {(3, 0): 1, (2, 1): 2, (1, 2): 2, (0, 3): 1}

 def test_tensor_unit(self):
  x = hg.standard_motive("pgl-q", 3, "M")
  assert hg.tensor(x, hg.unit()) == x

 def test_dual_and_twist(self):
  d = hg.dual(hg.standard_motive("pgl-q", 2, "M"))
  assert _mults(d) == {(-1, 0): 1, (0, -1): 1}
  tw = hg.tate_twist(hg.unit(), 1)
  assert tw.weight == -2 and _mults(tw) == {(-1, -1): 1}

 def test_twist_flips_frobenius_sign(self):
  u = hg.unit()
  assert (u.fplus, u.fminus) == (1, 0)
  assert (hg.tate_twist(u, 1).fplus, hg.tate_twist(u, 1).fminus) == (0, 1)
  assert hg.tate_twist(hg.tate_twist(u, 1), 1).fplus == 1

 def test_dual_twist_symmetry(self):
  m = hg.standard_motive("pgl-q", 4, "M")
  back = hg.tate_twist(hg.dual(m), -m.weight)
  assert _mults(back) == _mults(m)

 def test_restrict_scalars(self):
  r = hg.restrict_scalars(hg.standard_motive("pgl-e", 2, "M"))
  assert _mults(r) == {(1, 0): 2, (0, 1): 2}
  q = hg.restrict_scalars(hg.unit(over_e=True))
  assert q.rank() == 2 and (q.fplus, q.fminus) == (1, 1)
  with pytest.raises(ValueError):
   hg.restrict_scalars(hg.unit())

 def test_adjoint_example(self):
  ad = hg.adjoint(hg.standard_motive("pgl-q", 2, "M"), "linear")
  assert _mults(ad) == {(1, -1): 1, (0, 0): 1, (-1, 1): 1}

 def test_so5_symplectic_rank(self):
  ad = hg.case_adjoint("so-even", 2, "N")
  assert ad.rank() == 10
  vals = [m for _, m in ad.pieces()]
  assert vals == [1, 1, 2, 2, 2, 1, 1]

 def test_adjoint_ranks(self):
  for n in range(1, 9):
   k = n
   assert hg.case_adjoint("so-even", n, "M").rank() == k * (2 * k - 1)
   assert hg.case_adjoint("so-even", n, "N").rank() == k * (2 * k + 1)
   assert hg.case_adjoint("so-odd", n, "M").rank() == \
       (k + 1) * (2 * k + 1)
   for case in ("pgl-q", "pgl-e"):
    assert hg.case_adjoint(case, n, "M").rank() == n * n - 1
    assert hg.case_adjoint(case, n, "N").rank() == (n + 1) ** 2 - 1

 def test_symmetry_preserved_everywhere(self):
  for case in CASES:
   for n in (1, 3, 5):
    for factor in ("M", "N"):
     for h in (hg.standard_motive(case, n, factor),
               hg.case_adjoint(case, n, factor)):
      for (p, q), m in h.mult.items():
       assert h.mult[(q, p)] == m

 def test_weight_balance(self):
  for n in (2, 4):
   h = hg.tensor(hg.standard_motive("so-even", n, "M"),
                 hg.standard_motive("so-even", n, "N"))
   s1 = sum(p * m for (p, q), m in h.mult.items())
   s2 = sum(q * m for (p, q), m in h.mult.items())
   assert s1 == s2


class TestDeligneData:
 def test_odd_weight_tensor(self):
  t = hg.tensor(hg.standard_motive("pgl-q", 2, "M"),
                hg.standard_motive("pgl-q", 2, "N"))
  assert hg.deligne_data(t) == (3, 3, 1, 1)

 def test_diagonal_plus(self):
  h = hg.HodgeStructure(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1},
                        fplus=2, fminus=0)
  dplus, dminus, pplus, pminus = hg.deligne_data(h)
  assert (dplus, dminus) == (3, 1)
  assert (pplus, pminus) == (0, 1)  # w/2 - 1 and w/2

 def test_violation(self):
  h = hg.HodgeStructure(0, {(0, 0): 2}, fplus=1, fminus=1)
  with pytest.raises(ValueError, match="Deligne_period violated"):
   hg.deligne_data(h)

 def test_flagged_needs_restriction(self):
  with pytest.raises(ValueError):
   hg.deligne_data(hg.unit(over_e=True))


class TestCaseDescriptor:
 def test_constants(self):
  for n in range(1, 9):
   for case in ("pgl-q", "pgl-e"):
    d = hg.CaseDescriptor(case, n)
    assert (d.r, d.m, d.e) == (n, n * (n + 1), 2)
   d = hg.CaseDescriptor("so-even", n)
   assert (d.r, d.m, d.e) == (2 * n - 1, 2 * n * n, 1)
   d = hg.CaseDescriptor("so-odd", n)
   assert (d.r, d.m, d.e) == (2 * n, 2 * n * (n + 1), 1)


class TestOracles:
 """Independent basis-counting oracles for tensor, Sym^2/Lambda^2, and
 the case adjoints, for every case family and n up to 8."""

 @pytest.mark.parametrize("case", CASES)
 @pytest.mark.parametrize("n", range(1, 9))
 def test_tensor_convolution(self, case, n):
  a = hg.standard_motive(case, n, "M")
  b = hg.standard_motive(case, n, "N")
  assert _mults(hg.tensor(a, b)) == oracle_tensor(a, b)

 @pytest.mark.parametrize("case", CASES)
 @pytest.mark.parametrize("n", range(1, 9))
 def test_adjoint_multiplicities(self, case, n):
  for factor in ("M", "N"):
   std = hg.standard_motive(case, n, factor)
   ad = hg.case_adjoint(case, n, factor)
   if case in ("pgl-q", "pgl-e"):
    expect = oracle_linear_adjoint(std)
   else:
    anti = factor == "M"
    raw = oracle_square(std, anti)
    expect = {(p - std.weight, q - std.weight): m
              for (p, q), m in raw.items()}
   assert _mults(ad) == expect, (case, n, factor)

 def test_square_parts_complement(self):
  # Sym^2 + Lambda^2 = full tensor square
  for n in (1, 2, 3):
   std = hg.standard_motive("so-even", n, "M")
   sym = oracle_square(std, False)
   alt = oracle_square(std, True)
   full = oracle_tensor(std, std)
   keys = set(sym) | set(alt)
   assert {k: sym.get(k, 0) + alt.get(k, 0) for k in keys} == full

 def test_frobenius_rank_consistency(self):
  # restriction of scalars splits the diagonal evenly
  for case in ("so-even", "so-odd"):
   for n in (1, 2, 4):
    for factor in ("M", "N"):
     ad = hg.case_adjoint(case, n, factor)
     r = hg.restrict_scalars(ad)
     assert r.rank() == 2 * ad.rank()
     assert r.fplus == r.fminus == ad.diagonal_mult()
