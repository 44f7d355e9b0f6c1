"""Command-line interface: ``toricrep <command> [options]``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from dataclasses import dataclass, field
from typing import Callable

from . import __version__
from . import reference as ref
from .action import (
    RealToricSpace,
    VertexGroup,
    assemble,
    check_equivariance,
    euler_characteristic,
    homology_terms,
    load_group,
    orbit_decomposition,
)
from .cache import ComplexCache, default_cache_dir
from .complex import SimplicialComplex, h_vector
from .coxeter import (
    DEFAULT_GROUP_LIMIT,
    RootSystem,
    build_coxeter_complex,
    coefficient_orbits,
    euler_characteristic_from_h,
    h_polynomial,
    lambda_matrix,
    weyl_vertex_action,
)
from .errors import ToricRepError
from .gf2 import Gf2Matrix, vector_to_str
from .nestohedra import (
    adjacent_transpositions,
    building_set_Bnk,
    load_building_set,
    nested_set_complex,
    top_homology_check,
    toric_space,
    vertex_action,
)
from .oracles import count_permutations_with_descents, typeA_betti
from .tableaux import decompose_typeA, decompose_typeB

log = logging.getLogger("toricrep")

EXIT_COMPUTE = 1
EXIT_INPUT = 2
EXIT_MISMATCH = 3


class InputError(Exception):
    """Bad or inconsistent command-line input."""


class VerificationFailed(Exception):
    pass


@dataclass
class ResultRecord:
    command: str
    inputs: dict
    result: dict
    checks: dict = field(default_factory=dict)
    wall_time: float = 0.0
    version: str = __version__

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "command": self.command,
            "input": self.inputs,
            "result": self.result,
            "checks": self.checks,
            "version": self.version,
            "wall_time": round(self.wall_time, 3),
        }


# --- input loading -------------------------------------------------------------


def _read_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_space(args) -> tuple[RealToricSpace, VertexGroup | None]:
    if not args.complex or not args.lambda_:
        raise InputError("--complex and --lambda are both required")
    k = SimplicialComplex.from_json(_read_json(args.complex))
    try:
        with open(args.lambda_) as fh:
            lam = Gf2Matrix.from_text(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {args.lambda_}: {exc}") from exc
    space = RealToricSpace(k, lam)
    group = load_group(args.group) if args.group else None
    return space, group


def _root_system(args) -> RootSystem:
    if not args.root_system:
        raise InputError("--root-system is required")
    try:
        return RootSystem.of(args.root_system)
    except (ValueError, KeyError) as exc:
        raise InputError(str(exc)) from exc


def _coxeter(args, r: RootSystem):
    limit = sys.maxsize if args.allow_huge else DEFAULT_GROUP_LIMIT
    if args.no_cache:
        return build_coxeter_complex(r, limit)
    return ComplexCache(args.cache_dir).coxeter_complex(r, limit)


def _coxeter_space(args) -> tuple[RealToricSpace, VertexGroup, str]:
    r = _root_system(args)
    c = _coxeter(args, r)
    return RealToricSpace(c.complex, lambda_matrix(c)), weyl_vertex_action(c), r.label


# --- payload helpers ---------------------------------------------------------


def _betti_payload(space: RealToricSpace, group: VertexGroup | None, threads: int) -> tuple[dict, dict]:
    checks = {}
    if group is not None:
        eq = check_equivariance(group, space)
        if not eq:
            raise InputError(f"group generator {eq.violating} does not preserve the row space")
        checks["equivariant"] = True
    terms = homology_terms(space, group, threads)
    betti = assemble(terms, space.complex.dim + 1)
    chi = euler_characteristic(space)
    checks["euler_identity"] = betti.euler() == chi
    m = space.lam.ncols
    summands = [
        {
            "representative": vector_to_str(t.representative, m),
            "multiplicity": t.multiplicity,
            "reduced_betti": {str(d): b for d, b in t.reduced.as_dict().items()},
        }
        for t in terms
    ]
    return {"betti": list(betti.values), "euler_characteristic": chi, "summands": summands}, checks


def cmd_betti(args) -> ResultRecord:
    if args.root_system:
        space, group, label = _coxeter_space(args)
        inputs = {"root_system": label}
    else:
        space, group = _load_space(args)
        inputs = {"complex": args.complex, "lambda": args.lambda_, "group": args.group}
    result, checks = _betti_payload(space, group, args.threads)
    return ResultRecord("betti", inputs, result, checks)


def cmd_custom(args) -> ResultRecord:
    space, group = _load_space(args)
    result, checks = _betti_payload(space, group, args.threads)
    result["nonsingular"] = space.is_nonsingular()
    inputs = {"complex": args.complex, "lambda": args.lambda_, "group": args.group}
    return ResultRecord("custom", inputs, result, checks)


def cmd_hvector(args) -> ResultRecord:
    if args.root_system:
        r = _root_system(args)
        h = h_polynomial(r)
        return ResultRecord("hvector", {"root_system": r.label}, {"h": h})
    if not args.complex:
        raise InputError("--root-system or --complex is required")
    k = SimplicialComplex.from_json(_read_json(args.complex))
    return ResultRecord("hvector", {"complex": args.complex}, {"h": h_vector(k)})


def cmd_euler(args) -> ResultRecord:
    rec = cmd_hvector(args)
    return ResultRecord("euler", rec.inputs, {"euler_characteristic": euler_characteristic_from_h(rec.result["h"])})


def cmd_orbits(args) -> ResultRecord:
    if args.root_system:
        r = _root_system(args)
        orbits = [{"rows": list(rows), "size": size} for rows, size in coefficient_orbits(r)]
        return ResultRecord("orbits", {"root_system": r.label}, {"orbits": orbits})
    space, group = _load_space(args)
    if group is None:
        raise InputError("--group is required with --complex")
    dec = orbit_decomposition(group, space.lam)
    orbits = [
        {"representative": vector_to_str(o.representative, dec.length), "size": o.size}
        for o in dec.nonzero
    ]
    inputs = {"complex": args.complex, "lambda": args.lambda_, "group": args.group}
    return ResultRecord("orbits", inputs, {"orbits": orbits})


def cmd_decompose(args) -> ResultRecord:
    if args.family not in ("A", "B") or args.n is None or args.degree is None:
        raise InputError("decompose needs --family A|B, --n and --degree")
    try:
        if args.family == "A":
            dec = decompose_typeA(args.n, args.degree)
        else:
            dec = decompose_typeB(args.n, args.degree)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    inputs = {"family": args.family, "n": args.n, "degree": args.degree}
    return ResultRecord("decompose", inputs, {"summands": dec.rows(), "dimension": dec.total_dimension})


def cmd_nestohedron(args) -> ResultRecord:
    if args.building_set:
        b = load_building_set(args.building_set)
        nested = nested_set_complex(b)
        group = load_group(args.group) if args.group else None
        space = toric_space(nested)
        result, checks = _betti_payload(space, group, args.threads)
        return ResultRecord("nestohedron", {"building_set": args.building_set}, result, checks)
    if args.n is None or args.k is None:
        raise InputError("nestohedron needs --n and --k (or --building-set)")
    inputs = {"n": args.n, "k": args.k, "top_check": args.top_check}
    try:
        b = building_set_Bnk(args.n, args.k)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.top_check:
        try:
            top = top_homology_check(args.n, args.k, args.threads)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        result = {
            "betti": list(top.betti.values),
            "top_degree": top.top_degree,
            "top_dim": top.top_dim,
            "expected_top_dim": top.expected_dim,
            "vanishing_above": top.vanishing_above,
        }
        rec = ResultRecord("nestohedron", inputs, result, {"top_homology": top.ok})
        if not top.ok:
            raise VerificationFailed(rec)
        return rec
    nested = nested_set_complex(b)
    group = vertex_action(nested, adjacent_transpositions(b.ground))
    result, checks = _betti_payload(toric_space(nested), group, args.threads)
    return ResultRecord("nestohedron", inputs, result, checks)


# --- verify ------------------------------------------------------------------------


def verification_items(quick: bool = False, threads: int = 1) -> list[tuple[str, Callable[[], bool]]]:
    """Named checks reproducing the known tables; each returns True on a match."""
    items: list[tuple[str, Callable[[], bool]]] = []

    def betti(label):
        def run():
            c = build_coxeter_complex(RootSystem.of(label))
            space = RealToricSpace(c.complex, lambda_matrix(c))
            terms = homology_terms(space, weyl_vertex_action(c), threads)
            return tuple(assemble(terms, c.complex.dim + 1).values) == ref.BETTI[label]
        return run

    for label in ("G2", "F4") + (() if quick else ("E6",)):
        items.append((f"betti {label}", betti(label)))
    for label, sizes in ref.ORBIT_SIZES.items():
        items.append((
            f"orbit sizes {label}",
            lambda label=label, sizes=sizes: tuple(sorted(s for _, s in coefficient_orbits(RootSystem.of(label)))) == sizes,
        ))
    for label, h in ref.H_POLYNOMIAL.items():
        items.append((f"h-polynomial {label}", lambda label=label, h=h: tuple(h_polynomial(RootSystem.of(label))) == h))
    for label, chi in ref.EULER.items():
        items.append((
            f"euler characteristic {label}",
            lambda label=label, chi=chi: euler_characteristic_from_h(h_polynomial(RootSystem.of(label))) == chi,
        ))
    for (n, r), want in ref.TYPE_A.items():
        items.append((
            f"type A decomposition n={n} r={r}",
            lambda n=n, r=r, want=want: decompose_typeA(n, r).as_dict() == want
            and decompose_typeA(n, r).total_dimension == ref.TYPE_A_DIM[(n, r)],
        ))
    for (n, k), want in ref.TYPE_B.items():
        items.append((
            f"type B decomposition n={n} k={k}",
            lambda n=n, k=k, want=want: decompose_typeB(n, k).as_dict() == want
            and decompose_typeB(n, k).total_dimension == ref.TYPE_B_DIM[(n, k)],
        ))

    def torus():
        k = SimplicialComplex.from_json(ref.TORUS_COMPLEX)
        g = VertexGroup.from_json(ref.TORUS_GROUP)
        x1 = RealToricSpace(k, Gf2Matrix.from_strings(ref.TORUS_LAMBDA_1))
        x2 = RealToricSpace(k, Gf2Matrix.from_strings(ref.TORUS_LAMBDA_2))
        eq2 = check_equivariance(g, x2)
        homology = assemble(homology_terms(x2, g), k.dim + 1)
        return (
            not check_equivariance(g, x1).ok
            and eq2.ok
            and eq2.matrices[0].to_strings() == ["01", "10"]
            and tuple(homology.values) == ref.TORUS_BETTI
        )

    items.append(("torus example", torus))
    for n in range(1, 6):
        items.append((
            f"type A betti n={n}",
            lambda n=n: tuple(
                decompose_typeA(n, r).total_dimension for r in range((n + 1) // 2 + 1)
            ) == tuple(typeA_betti(n, r) for r in range((n + 1) // 2 + 1)),
        ))
    for n, k in ref.NESTOHEDRON_CASES:
        def nesto(n=n, k=k):
            top = top_homology_check(n, k, threads)
            q = set(range(1, k + 1)) | set(range(1, n + 1, 2))
            return top.ok and top.top_dim == count_permutations_with_descents(n + 1, q)
        items.append((f"nestohedron top homology n={n} k={k}", nesto))
    return items


def cmd_verify(args) -> ResultRecord:
    results = {}
    for name, check in verification_items(args.quick, args.threads):
        try:
            ok = bool(check())
        except ToricRepError as exc:
            log.error("%s: %s", name, exc)
            ok = False
        results[name] = ok
    rec = ResultRecord("verify", {"quick": args.quick}, {"items": results}, {"all": all(results.values())})
    if not all(results.values()):
        raise VerificationFailed(rec)
    return rec


COMMANDS = {
    "betti": cmd_betti,
    "hvector": cmd_hvector,
    "euler": cmd_euler,
    "orbits": cmd_orbits,
    "decompose": cmd_decompose,
    "nestohedron": cmd_nestohedron,
    "custom": cmd_custom,
    "verify": cmd_verify,
}


# --- output --------------------------------------------------------------------


def _table_rows(rec: ResultRecord) -> tuple[list[str], list[list]]:
    res = rec.result
    if "betti" in res:
        return ["degree", "betti"], [[d, b] for d, b in enumerate(res["betti"])]
    if "summands" in res and rec.command == "decompose":
        return ["shape", "multiplicity", "dimension"], [
            [json.dumps(s["shape"]), s["multiplicity"], s["dimension"]] for s in res["summands"]
        ]
    if "h" in res:
        return ["index", "h"], [[i, h] for i, h in enumerate(res["h"])]
    if "orbits" in res:
        key = "rows" if rec.inputs.get("root_system") else "representative"
        return [key, "size"], [[json.dumps(o[key]) if key == "rows" else o[key], o["size"]] for o in res["orbits"]]
    if "items" in res:
        return ["check", "ok"], [[name, ok] for name, ok in res["items"].items()]
    return list(res), [list(res.values())]


def render(rec: ResultRecord, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rec.to_json(), indent=2)
    header, rows = _table_rows(rec)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    cells = [header] + [[str(x) for x in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="toricrep", description=__doc__)
    p.add_argument("--version", action="version", version=f"toricrep {__version__}")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--root-system", help="e.g. G2, F4, E6, A3, B4")
    p.add_argument("--complex", help="JSON file with n_vertices and facets")
    p.add_argument("--lambda", dest="lambda_", metavar="FILE", help="text file of 0/1 rows")
    p.add_argument("--group", help="JSON file with degree and generators")
    p.add_argument("--building-set", help="JSON file with ground and members")
    p.add_argument("--family", choices=("A", "B"))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--degree", type=int)
    p.add_argument("--format", choices=("json", "csv", "table"), default="json")
    p.add_argument("--cache-dir", default=None, help=f"defaults to $TORICREP_CACHE or {default_cache_dir()}")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--threads", type=int, default=1, help="worker processes for per-orbit homology")
    p.add_argument("--allow-huge", action="store_true", help="lift the Weyl group size guard")
    p.add_argument("--top-check", action="store_true")
    p.add_argument("--quick", action="store_true", help="verify: skip the E6 homology run")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if args.threads < 1:
        parser.error("--threads must be positive")
    start = time.perf_counter()
    try:
        rec = COMMANDS[args.command](args)
        code = 0
    except VerificationFailed as exc:
        rec = exc.args[0]
        code = EXIT_MISMATCH
    except (InputError, ValueError) as exc:
        print(f"toricrep: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ToricRepError, ArithmeticError, MemoryError) as exc:
        print(f"toricrep: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    rec.wall_time = time.perf_counter() - start
    print(render(rec, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
