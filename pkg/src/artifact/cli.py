"""Command line front end.

Subcommands:
 invariants        real-group invariant table for a group descriptor
 cohomology-model  graded dimensions and checks of the exterior model
 hodge             multiplicity tables for the case structures
 lfactor           computed vs closed-form exponent row for one case
 period            ad-hoc reduction of a period s-expression
 check             full verdict for one case and n
 torsion           volume-ledger derivations
 rotation          quadratic-field rotation between two lattices
 verify-all        run every identity up to a bound; exit 0 iff all pass
"""

import argparse
import json
import sys
from fractions import Fraction

from . import rootsys
from . import exteralg
from . import hodge
from . import lgamma
from . import periodring
from . import ggpcheck


def _print_table(rows, headers):
 widths = [max(len(str(r[i])) for r in rows + [headers])
           for i in range(len(headers))]
 line = "  ".join(h.ljust(w) for h, w in zip(headers, widths))
 print(line)
 print("-" * len(line))
 for r in rows:
  print("  ".join(str(x).ljust(w) for x, w in zip(r, widths)))


def cmd_invariants(args):
 iv = rootsys.invariants(args.group)
 data = iv.as_dict()
 if args.json:
  print(json.dumps({k: str(v) for k, v in data.items()}, indent=1))
 else:
  for k, v in data.items():
   print("%-14s %s" % (k, v))
 return 0


def cmd_cohomology_model(args):
 model = exteralg.TemperedCohomologyModel(args.delta, args.q, args.k)
 rows = [(deg, dim) for deg, dim in
         exteralg.model_dims(args.delta, args.q, args.k)]
 _print_table(rows, ["degree", "dimension"])
 checks = [("freeness", exteralg.freeness_check(model)),
           ("poincare_adjoint", exteralg.poincare_adjoint_check(model)),
           ("isometry", exteralg.isometry_check(model, trials=20))]
 ok = True
 for name, res in checks:
  print("%-18s %s" % (name, "pass" if res else "FAIL"))
  ok = ok and res
 return 0 if ok else 1


_SHOW = ("M", "N", "AdM", "AdN", "MxN")


def _show_structure(case, n, which):
 if which == "M" or which == "N":
  return hodge.standard_motive(case, n, which)
 if which == "AdM":
  return hodge.case_adjoint(case, n, "M")
 if which == "AdN":
  return hodge.case_adjoint(case, n, "N")
 return hodge.tensor(hodge.standard_motive(case, n, "M"),
                     hodge.standard_motive(case, n, "N"))


def cmd_hodge(args):
 h = _show_structure(args.case, args.n, args.show)
 print("weight %d, rank %d%s" % (h.weight, h.rank(),
                                 ", flagged" if h.over_e else ""))
 _print_table([("(%d,%d)" % k, m) for k, m in h.pieces()],
              ["piece", "mult"])
 if not h.over_e and h.weight % 2 == 0:
  print("diagonal eigenvalues: +1 x %d, -1 x %d" % (h.fplus, h.fminus))
 return 0


def cmd_lfactor(args):
 rows = lgamma.table1_row(args.case, args.n)
 if args.json:
  print(json.dumps([{"name": r["name"],
                     "computed_exp": str(r["computed_exp"]),
                     "expected_exp": str(r["expected_exp"]),
                     "pass": r["pass"]} for r in rows], indent=1))
 else:
  _print_table([(r["name"], r["computed_exp"], r["expected_exp"],
                 "pass" if r["pass"] else "FAIL") for r in rows],
               ["column", "computed", "closed form", "verdict"])
 return 0 if all(r["pass"] for r in rows) else 1


def cmd_period(args):
 x = periodring.parse_expr(args.expr)
 if args.case:
  rels = periodring.case_relations(args.case, args.n)
  x = periodring.reduce(x, rels, args.mod)
 print(repr(x))
 return 0


def cmd_check(args):
 rep = ggpcheck.run_case(args.case, args.n)
 if args.json:
  print(json.dumps(rep.as_dict(), indent=1))
 else:
  _print_table([(r["name"], r["computed_exp"], r["expected_exp"],
                 "pass" if r["pass"] else "FAIL") for r in rep.table1],
               ["column", "computed", "closed form", "verdict"])
  print("condensate: residual %s, m=%d -> %s" %
        (rep.condensate["residual"], rep.condensate["m"],
         "pass" if rep.condensate["pass"] else "FAIL"))
  print("gamma1 exponent %s -> %s" %
        (rep.gamma1["exponent"], "pass" if rep.gamma1["pass"] else "FAIL"))
  print("gamma2 residual %s -> %s" %
        (rep.gamma2["residual"], "pass" if rep.gamma2["pass"] else "FAIL"))
 return 0 if rep.passed() else 1


def cmd_torsion(args):
 try:
  ledger = ggpcheck.torsion_ledger()
 except ggpcheck.LedgerUnderdetermined as e:
  print("FAIL: %s" % e)
  return 1
 ok = True
 for name, rec in sorted(ledger.derivations.items()):
  replay = ledger.replay(rec)
  ok = ok and replay
  print("%-10s class=%-7s conditional=%-5s replay=%s" %
        (name, rec["class"], rec["conditional"],
         "pass" if replay else "FAIL"))
  for ax, c in sorted(rec["coefficients"].items()):
   print("   %+s * %s" % (c, ax))
 return 0 if ok else 1


def _read_matrix(path):
 """Whitespace-separated rationals, row-major; lines starting with '#'
 are comments."""
 vals = []
 with open(path) as fh:
  for line in fh:
   line = line.strip()
   if not line or line.startswith("#"):
    continue
   vals.extend(Fraction(tok) for tok in line.split())
 if len(vals) != 9:
  raise ValueError("%s: expected 9 entries, got %d" % (path, len(vals)))
 return [vals[0:3], vals[3:6], vals[6:9]]


def cmd_rotation(args):
 try:
  ok, desc = ggpcheck.rotation_check(_read_matrix(args.v1),
                                     _read_matrix(args.v2),
                                     _read_matrix(args.sigma))
 except ValueError as e:
  print("FAIL: %s" % e)
  return 1
 print("square class b = %d, plane scale = %s" % (desc["b"], desc["scale"]))
 for row in desc["alpha"]:
  print("  " + "  ".join(repr(x) for x in row))
 return 0


def cmd_verify_all(args):
 try:
  status, _, lines = ggpcheck.verify_all(args.n_max)
 except ValueError as e:
  print("usage error: %s" % e, file=sys.stderr)
  return 2
 for line in lines:
  print(line)
 return status


def build_parser():
 p = argparse.ArgumentParser(prog="artifact", description=__doc__,
                             formatter_class=argparse.RawDescriptionHelpFormatter)
 sub = p.add_subparsers(dest="command", required=True)

 q = sub.add_parser("invariants", help="real-group invariants")
 q.add_argument("--group", required=True,
                help="descriptor, e.g. 'SL(4)/R' or 'PGL(2)/C x PGL(3)/C'")
 q.add_argument("--json", action="store_true")
 q.add_argument("--md", action="store_true")
 q.set_defaults(func=cmd_invariants)

 q = sub.add_parser("cohomology-model", help="exterior module model")
 q.add_argument("--delta", type=int, required=True)
 q.add_argument("--q", type=int, required=True)
 q.add_argument("--k", type=int, required=True)
 q.set_defaults(func=cmd_cohomology_model)

 q = sub.add_parser("hodge", help="case structure multiplicity tables")
 q.add_argument("--case", required=True, choices=periodring.CASES)
 q.add_argument("--n", type=int, required=True)
 q.add_argument("--show", required=True, choices=_SHOW)
 q.set_defaults(func=cmd_hodge)

 q = sub.add_parser("lfactor", help="exponent table row")
 q.add_argument("--case", required=True, choices=periodring.CASES)
 q.add_argument("--n", type=int, required=True)
 q.add_argument("--json", action="store_true")
 q.add_argument("--md", action="store_true")
 q.set_defaults(func=cmd_lfactor)

 q = sub.add_parser("period", help="reduce a period s-expression")
 q.add_argument("--expr", required=True,
                help="e.g. '(mul (pow twopii 2) (conj Q0.s))'")
 q.add_argument("--case", choices=periodring.CASES)
 q.add_argument("--n", type=int, default=1)
 q.add_argument("--mod", choices=("Q", "sqrtQ"), default="Q")
 q.set_defaults(func=cmd_period)

 q = sub.add_parser("check", help="full verdict for one case")
 q.add_argument("--case", required=True, choices=periodring.CASES)
 q.add_argument("--n", type=int, required=True)
 q.add_argument("--json", action="store_true")
 q.add_argument("--md", action="store_true")
 q.set_defaults(func=cmd_check)

 q = sub.add_parser("torsion", help="volume ledger derivations")
 q.set_defaults(func=cmd_torsion)

 q = sub.add_parser("rotation", help="quadratic rotation between lattices")
 q.add_argument("--v1", required=True)
 q.add_argument("--v2", required=True)
 q.add_argument("--sigma", required=True)
 q.set_defaults(func=cmd_rotation)

 q = sub.add_parser("verify-all", help="run every identity")
 q.add_argument("--n-max", type=int, required=True)
 q.set_defaults(func=cmd_verify_all)
 return p


def main(argv=None):
 args = build_parser().parse_args(argv)
 return args.func(args)


if __name__ == "__main__":
 sys.exit(main())
