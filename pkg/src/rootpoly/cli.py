"""rootpoly command line.

    rootpoly check FILE
    rootpoly lambda FILE [--root V|all] [--method a,b,...]
    rootpoly verify FILE [--root V]
    rootpoly hstar FILE [--method ...]
    rootpoly ehrhart FILE
    rootpoly gen-corpus OUTDIR [--seed S]

FILE holds either "digraph n m" followed by edge lines, or "matrix r c"
followed by integer rows.  Exit status: 0 pass, 1 verification failure,
2 input error, 3 scale cap.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import corpus
from . import digraph as dg
from . import ehrhart
from . import greedoid as gd
from . import matroid as om
from .exact_arith import DimensionError, IntegrityError, ScaleCapError
from .polynomial import Polynomial
from .polytope import (
    RootPolytope,
    arborescence_bases,
    dimension,
    mutated_bases,
    verify_triangulation,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3

HSTAR_ROUTES = ("ehrhart", "triangulation", "semipassivity", "visibility")


class InputError(ValueError):
    pass


@dataclass
class Verdict:
    name: str
    passed: bool
    witness: str | None = None


@dataclass
class RunReport:
    command: str
    input: str
    polynomials: dict[str, Polynomial] = field(default_factory=dict)
    verdicts: list[Verdict] = field(default_factory=list)
    info: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def check(self, name: str, ok: bool, witness: str | None = None):
        self.verdicts.append(Verdict(name, bool(ok), None if ok else witness))

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "input": self.input,
            "polynomials": {k: p.to_json() for k, p in self.polynomials.items()},
            "verdicts": [asdict(v) for v in self.verdicts],
            "info": self.info,
            "seconds": self.seconds,
            "passed": self.passed,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RunReport":
        return cls(
            d["command"],
            d["input"],
            {k: Polynomial.from_json(v) for k, v in d["polynomials"].items()},
            [Verdict(**v) for v in d["verdicts"]],
            d["info"],
            d["seconds"],
        )

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def loads(cls, text: str) -> "RunReport":
        return cls.from_dict(json.loads(text))

    def render(self) -> str:
        lines = [f"{self.command}: {self.input}"]
        for k, v in self.info.items():
            if not isinstance(v, (dict, list)):
                lines.append(f"  {k}: {json.dumps(v)}")
        for k, p in self.polynomials.items():
            lines.append(f"  {k} = {p}")
        for v in self.verdicts:
            tag = "PASS" if v.passed else "FAIL"
            lines.append(f"  {tag} {v.name}" + (f": {v.witness}" if v.witness else ""))
        lines.append(f"  ({self.seconds:.3f}s)")
        return "\n".join(lines)


# -- input ------------------------------------------------------------------------

def load_input(path: str):
    """A Digraph or an IntegerMatrix, by header keyword."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    first = next((ln.split()[0] for ln in text.splitlines()
                  if ln.split("#", 1)[0].strip()), "")
    try:
        if first == "digraph":
            return dg.parse_digraph(text)
        if first == "matrix":
            return om.parse_matrix(text)
    except (dg.GraphFormatError, om.MatrixFormatError) as exc:
        raise InputError(f"{path}: {exc}") from None
    raise InputError(f"{path}: expected a 'digraph' or 'matrix' header")


def _graph_only(obj, what: str) -> dg.Digraph:
    if not isinstance(obj, dg.Digraph):
        raise InputError(f"{what} needs a digraph file")
    return obj


def _roots(G: dg.Digraph, root: str) -> list[int]:
    if root == "all":
        return list(G.vertices)
    try:
        v = int(root)
    except ValueError:
        raise InputError(f"bad root {root!r}") from None
    if not 1 <= v <= G.n:
        raise InputError(f"root {v} out of range 1..{G.n}")
    return [v]


def _methods(spec: str | None, allowed, default) -> list[str]:
    if not spec or spec == "all":
        return list(default)
    out = [s.strip() for s in spec.split(",") if s.strip()]
    bad = [s for s in out if s not in allowed]
    if bad:
        raise InputError(f"unknown method(s) {', '.join(bad)}; choose from {', '.join(allowed)}")
    return out


def _require_eulerian(G: dg.Digraph, what: str):
    if not dg.is_eulerian(G):
        raise InputError(f"{what} needs an Eulerian digraph; this one is not")


def _matrix_polytope(M) -> RootPolytope:
    R = om.matroid_from_matrix(M)
    from .exact_arith import is_totally_unimodular

    if not is_totally_unimodular(R.matrix):
        raise InputError("matrix is not totally unimodular")
    return RootPolytope(om.MatroidRep(R.matrix, R.labels, True))


# -- commands ---------------------------------------------------------------------

def cmd_check(obj, name: str) -> RunReport:
    rep = RunReport("check", name)
    if isinstance(obj, dg.Digraph):
        G = obj
        rep.info.update(vertices=G.n, edges=G.m, connected=dg.is_connected(G),
                        eulerian=dg.is_eulerian(G))
        if G.m:
            R = om.graphic_matroid(G)
            rep.info["graphic_rank"] = R.rank
            if rep.info["eulerian"] and R.rank < G.m:
                P = RootPolytope(om.dual(R))
                rep.info["dual_rank"] = P.rep.rank
                rep.info["dual_co_eulerian"] = om.is_co_eulerian(P.rep)
                rep.info["polytope_dimension"] = dimension(P)
        if not rep.info["eulerian"]:
            rep.info["hstar_available"] = False
    else:
        P = _matrix_polytope(obj)
        rep.info.update(rows=obj.nrows, columns=obj.ncols, rank=P.rep.rank,
                        totally_unimodular=True,
                        eulerian=om.is_eulerian_matroid(P.rep),
                        co_eulerian=om.is_co_eulerian(P.rep),
                        polytope_dimension=dimension(P))
    return rep


def _breakdown(Gr: gd.BranchingGreedoid) -> list[dict]:
    out = []
    for B in Gr.bases():
        out.append({
            "arborescence": sorted(B),
            "greedoid_activity": gd.external_activity(Gr, B),
            "semiactivity": gd.external_activity(Gr, B, "semi"),
        })
    return out


def cmd_lambda(obj, name: str, root: str = "1", methods: str | None = None,
               max_box: int = ehrhart.MAX_BOX) -> RunReport:
    G = _graph_only(obj, "lambda")
    if not dg.is_connected(G):
        raise InputError("digraph is not connected")
    eulerian = dg.is_eulerian(G)
    default = gd.METHODS if eulerian else [m for m in gd.METHODS if m not in gd.HSTAR_METHODS]
    chosen = _methods(methods, gd.METHODS, default)
    if not eulerian and any(m in gd.HSTAR_METHODS for m in chosen):
        raise InputError("h* methods need an Eulerian digraph; this one is not")
    rep = RunReport("lambda", name)
    P = RootPolytope(om.dual(om.graphic_matroid(G))) if eulerian and G.m else None
    roots = _roots(G, root)
    for v in roots:
        Gr = gd.BranchingGreedoid(G, v)
        for meth in chosen:
            key = meth if len(roots) == 1 else f"{meth}@{v}"
            rep.polynomials[key] = gd.greedoid_polynomial(Gr, meth, P=P, max_box=max_box)
    values = list(rep.polynomials.values())
    if len(values) >= 2:
        same = all(p == values[0] for p in values)
        witness = None
        if not same:
            rep.info["breakdown"] = {str(v): _breakdown(gd.BranchingGreedoid(G, v)) for v in roots}
            witness = "; ".join(f"{k}: {p}" for k, p in rep.polynomials.items())
        rep.check("agreement", same, witness)
    return rep


def cmd_verify(obj, name: str, root: str = "1", max_box: int = ehrhart.MAX_BOX,
               mutate: str | None = None) -> RunReport:
    G = _graph_only(obj, "verify")
    _require_eulerian(G, "verify")
    rep = RunReport("verify", name)
    if G.m == 0:
        rep.check("trivial", True)
        return rep
    P = RootPolytope(om.dual(om.graphic_matroid(G)))
    roots = _roots(G, root)

    hstar = ehrhart.hstar_from_ehrhart(P, max_box)
    rep.polynomials["hstar"] = hstar
    for v in roots:
        D = arborescence_bases(G, v)
        if mutate:
            D = mutated_bases(P, D, mutate)
            if D is None:
                raise InputError(f"no '{mutate}' mutation exists for this graph")
        tri = verify_triangulation(P, D, volume=int(sum(hstar.coeffs)))
        rep.check(f"triangulation@{v}", tri.ok, tri.witness())

    lam = {v: gd.greedoid_polynomial(gd.BranchingGreedoid(G, v), "activity") for v in G.vertices}
    rep.polynomials["lambda"] = lam[1]
    d = dimension(P)
    from_hstar = gd.lambda_from_hstar(hstar, d)
    rep.check("lambda = reflected h*", from_hstar == lam[1], f"{lam[1]} vs {from_hstar}")
    odd = [v for v in G.vertices if lam[v] != lam[1]]
    rep.check("root independence", not odd,
              "; ".join(f"root {v}: {lam[v]} vs root 1: {lam[1]}" for v in odd))

    Grev = dg.reverse(G)
    lam_rev = gd.greedoid_polynomial(gd.BranchingGreedoid(Grev, 1), "activity")
    rep.polynomials["lambda_reversed"] = lam_rev
    rep.check("reversal", lam_rev == lam[1], f"{lam_rev} vs {lam[1]}")

    bad = []
    for v in G.vertices:
        count = dg.count_arborescences_det(G, v)
        if lam[v](1) != count:
            bad.append(f"root {v}: lambda(1) = {lam[v](1)}, matrix-tree {count}")
    rep.check("lambda(1) = arborescence count", not bad, "; ".join(bad))
    return rep


def _polytope_of(obj) -> tuple[RootPolytope, dg.Digraph | None]:
    if isinstance(obj, dg.Digraph):
        _require_eulerian(obj, "h* computation")
        if obj.m == 0 or obj.m < obj.n:
            raise InputError("dual matroid is empty")
        return RootPolytope(om.dual(om.graphic_matroid(obj))), obj
    return _matrix_polytope(obj), None


def cmd_hstar(obj, name: str, root: str = "1", methods: str | None = None,
              max_box: int = ehrhart.MAX_BOX) -> RunReport:
    P, G = _polytope_of(obj)
    chosen = _methods(methods, HSTAR_ROUTES, HSTAR_ROUTES if G is not None else ["ehrhart"])
    if G is None and chosen != ["ehrhart"]:
        raise InputError("matrix input supports only the ehrhart route (no dissecting set is known)")
    rep = RunReport("hstar", name)
    rep.info["dimension"] = dimension(P)
    D = arborescence_bases(G, _roots(G, root)[0]) if G is not None else None
    for route in chosen:
        if route == "ehrhart":
            h = ehrhart.hstar_from_ehrhart(P, max_box)
        elif route == "triangulation":
            h = ehrhart.hstar_from_triangulation(P, D)
        elif route == "semipassivity":
            h = ehrhart.hstar_from_semipassivity(P, D)
        else:
            h = ehrhart.hstar_from_visibility(P, D)
        rep.polynomials[route] = h
    values = list(rep.polynomials.values())
    if len(values) >= 2:
        rep.check("agreement", all(p == values[0] for p in values),
                  "; ".join(f"{k}: {p}" for k, p in rep.polynomials.items()))
    return rep


def cmd_ehrhart(obj, name: str, max_box: int = ehrhart.MAX_BOX) -> RunReport:
    P, _ = _polytope_of(obj)
    rep = RunReport("ehrhart", name)
    d = dimension(P)
    eps = ehrhart.ehrhart_polynomial(P, max_box)
    rep.info["dimension"] = d
    rep.info["counts"] = [int(eps(t)) for t in range(d + 3)]
    rep.polynomials["ehrhart"] = eps
    rep.polynomials["hstar"] = ehrhart.hstar_from_ehrhart(P, max_box)
    return rep


def cmd_gen_corpus(outdir: str, n_max: int = 5, m_max: int = 9, count: int = 50,
                   seed: int = 0) -> RunReport:
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    graphs = corpus.generate_corpus(n_max, m_max, count, seed)
    for name, G in graphs.items():
        (out / f"{name}.txt").write_text(dg.format_digraph(G))
    rep = RunReport("gen-corpus", str(out))
    rep.info.update(graphs=len(graphs), seed=seed)
    rep.check("all eulerian", all(dg.is_eulerian(G) for G in graphs.values()))
    return rep


# -- entry point ------------------------------------------------------------------

def _u64(s: str) -> int:
    v = int(s)
    if not 0 <= v < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rootpoly", description="Greedoid polynomials and root polytopes of Eulerian digraphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, root=True, method=True):
        sp.add_argument("input")
        if root:
            sp.add_argument("--root", default="1", help="root vertex, or 'all' (lambda only)")
        if method:
            sp.add_argument("--method", default=None, help="comma-separated list, or 'all'")
        sp.add_argument("--max-box", type=int, default=ehrhart.MAX_BOX,
                        help="cap on lattice points scanned per dilate")
        sp.add_argument("--json", action="store_true")

    common(sub.add_parser("check", help="parse and report basic invariants"), root=False, method=False)
    common(sub.add_parser("lambda", help=f"greedoid polynomial ({', '.join(gd.METHODS)})"))
    v = sub.add_parser("verify", help="triangulation, root sweep, reversal, matrix-tree")
    common(v, method=False)
    v.add_argument("--mutate", choices=("drop", "swap"), help=argparse.SUPPRESS)
    common(sub.add_parser("hstar", help=f"h*-polynomial ({', '.join(HSTAR_ROUTES)})"))
    common(sub.add_parser("ehrhart", help="Ehrhart polynomial by lattice-point counting"),
           root=False, method=False)

    g = sub.add_parser("gen-corpus", help="write a seeded corpus of Eulerian digraphs")
    g.add_argument("outdir")
    g.add_argument("--n-max", type=int, default=5)
    g.add_argument("--m-max", type=int, default=9)
    g.add_argument("--count", type=int, default=50)
    g.add_argument("--seed", type=_u64, default=0)
    g.add_argument("--json", action="store_true")
    return p


def run(args: argparse.Namespace) -> RunReport:
    if args.command == "gen-corpus":
        return cmd_gen_corpus(args.outdir, args.n_max, args.m_max, args.count, args.seed)
    obj = load_input(args.input)
    if args.command == "check":
        return cmd_check(obj, args.input)
    if args.command == "lambda":
        return cmd_lambda(obj, args.input, args.root, args.method, args.max_box)
    if args.command == "verify":
        return cmd_verify(obj, args.input, args.root, args.max_box, args.mutate)
    if args.command == "hstar":
        return cmd_hstar(obj, args.input, args.root, args.method, args.max_box)
    return cmd_ehrhart(obj, args.input, args.max_box)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        rep = run(args)
    except ScaleCapError as exc:
        print(f"scale cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, DimensionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except IntegrityError as exc:
        print(f"integrity failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    rep.seconds = time.perf_counter() - t0
    print(rep.dumps() if args.json else rep.render())
    return EXIT_OK if rep.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
