"""Command-line front end.

Subcommands: solve (exact class solvers), approx (approximation schemes),
oracle (branch-and-bound baseline), verify (check a vertex-set certificate),
generate and reduce (emit instances), bench (solver vs oracle table).

Machine-readable output is line oriented:

    status feasible|infeasible
    value <num>[/<den>]
    set <v1> <v2> ...

Exit codes: 0 solved / verified true, 1 infeasible / verified false,
2 usage or input error, 3 budget exceeded.  Values print as exact
rationals in lowest terms.  EM_BUDGET_VERTICES overrides the oracle's
vertex budget.  --threads is accepted for interface stability; all
solvers here run sequentially, which keeps output reproducible.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from fractions import Fraction

from .blocks import solve_block
from .cographs import cotree_build, solve_cograph
from .complete import ptas_complete, solve_complete_cbounded
from .core import BudgetExceeded, InputError, Instance, Solution, is_monitoring_set
from .generators import (
    gen_block_graph,
    gen_cograph,
    gen_complete,
    gen_interval,
    gen_planar,
    gen_split,
    gen_unit_disk,
)
from .intervals import solve_interval
from .oracle import SearchBudget, exact_gamma_m
from .planar import ptas_planar
from .reductions import (
    reduce_bip_tds_to_comparability,
    reduce_is_to_em,
    reduce_planar_vc_to_udg,
    reduce_tds_to_em,
    split_gamma_m,
    split_partition,
)
from .textio import InstanceDocument, format_instance_text, parse_instance_text

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _budget_from_env() -> SearchBudget | None:
    raw = os.environ.get("EM_BUDGET_VERTICES")
    if raw is None:
        return None
    try:
        return SearchBudget(max_vertices=int(raw))
    except ValueError:
        raise InputError(f"EM_BUDGET_VERTICES={raw!r} is not an integer") from None


def _read_document(path: str | None) -> InstanceDocument:
    text = sys.stdin.read() if path in (None, "-") else _read_file(path)
    return parse_instance_text(text)


def _read_file(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_out(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _print_solution(sol: Solution) -> int:
    print(f"status {sol.status}")
    if not sol.feasible:
        return EXIT_INFEASIBLE
    print(f"value {sol.value}")
    print("set" + "".join(f" {v}" for v in sol.vertices))
    return EXIT_OK


def _parse_demand_spec(text: str):
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    return int(text)


def _parse_weight_spec(text: str):
    if ".." in text:
        lo, rest = text.split("..", 1)
        if ":" in rest:
            hi, den = rest.split(":", 1)
            return Fraction(lo), Fraction(hi), int(den)
        return Fraction(lo), Fraction(rest), 1
    return Fraction(text)


def _solve_auto(doc: InstanceDocument) -> Solution:
    inst = doc.instance
    if doc.realization is not None:
        return solve_interval(inst, doc.realization)
    if doc.cotree is not None:
        return solve_cograph(inst, doc.cotree)
    if inst.graph.is_complete():
        return solve_complete_cbounded(inst)
    return solve_block(inst)


def _cmd_solve(args) -> int:
    doc = _read_document(args.infile)
    inst = doc.instance
    if args.klass == "complete":
        sol = solve_complete_cbounded(inst)
    elif args.klass == "block":
        sol = solve_block(inst)
    elif args.klass == "interval":
        if doc.realization is None:
            raise InputError(
                "interval solver needs 'i' realization lines in the instance file"
            )
        sol = solve_interval(inst, doc.realization)
    elif args.klass == "cograph":
        tree = doc.cotree if doc.cotree is not None else cotree_build(inst.graph)
        if tree is None:
            raise InputError("graph is not a cograph; supply a valid 't' line")
        sol = solve_cograph(inst, tree)
    elif args.klass == "split":
        if not inst.is_uniform(1):
            raise InputError("split solver handles 1-uniform demands only")
        if any(w != 1 for w in inst.weights):
            raise InputError("split solver handles unit weights only")
        parts = split_partition(inst.graph)
        if parts is None:
            raise InputError("graph is not a split graph")
        sol = split_gamma_m(
            inst.graph, parts[0], parts[1], budget=_budget_from_env()
        )
    else:
        try:
            sol = _solve_auto(doc)
        except InputError as exc:
            raise InputError(
                f"auto-detection failed ({exc}); pass --class explicitly or add "
                "an 'i'/'t' certificate line"
            ) from exc
    return _print_solution(sol)


def _cmd_approx(args) -> int:
    doc = _read_document(args.infile)
    eps = Fraction(args.epsilon)
    if args.klass == "complete":
        sol = ptas_complete(doc.instance, eps)
    else:
        sol = ptas_planar(doc.instance, eps, budget=_budget_from_env())
    return _print_solution(sol)


def _cmd_oracle(args) -> int:
    doc = _read_document(args.infile)
    sol = exact_gamma_m(doc.instance, budget=_budget_from_env())
    return _print_solution(sol)


def _parse_solution_file(text: str) -> tuple[int, ...]:
    ids: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith("status"):
            continue
        if line.startswith("value"):
            continue
        parts = line.split()
        if parts[0] == "set":
            parts = parts[1:]
        for token in parts:
            ids.append(int(token))
    return tuple(sorted(set(ids)))


def _cmd_verify(args) -> int:
    doc = _read_document(args.infile)
    inst = doc.instance
    chosen = _parse_solution_file(_read_file(args.solution))
    bad = [v for v in chosen if not 0 <= v < inst.graph.n]
    if bad:
        raise InputError(f"solution mentions unknown vertices {bad}")
    g = inst.graph
    deficits = []
    for (u, v), c in zip(g.edges, inst.demands):
        have = len((g.neighbors(u) & g.neighbors(v)) & set(chosen))
        if have < c:
            deficits.append((u, v, c, have))
    if not deficits:
        assert is_monitoring_set(inst, chosen)
        print("verified true")
        return EXIT_OK
    print("verified false")
    for u, v, need, have in deficits:
        print(f"deficit {u} {v} {need} {have}")
    return EXIT_INFEASIBLE


def _cmd_generate(args) -> int:
    demand = _parse_demand_spec(args.demand)
    weight = _parse_weight_spec(args.weight)
    seed = args.seed
    realization = None
    cotree = None
    comments = [f"# edgemon generate --class {args.klass} --seed {seed}"]
    if args.klass == "complete":
        inst = gen_complete(args.n, demand=demand, weight=weight, seed=seed)
    elif args.klass == "block":
        sizes = [int(s) for s in args.blocks.split(",")]
        inst = gen_block_graph(sizes, demand=demand, weight=weight, seed=seed)
    elif args.klass == "interval":
        lengths = "unit" if args.unit_lengths else "random"
        inst, realization = gen_interval(
            args.n, lengths=lengths, demand=demand, weight=weight, seed=seed
        )
    elif args.klass == "cograph":
        inst, cotree = gen_cograph(args.n, demand=demand, weight=weight, seed=seed)
    elif args.klass == "split":
        inst = gen_split(
            args.clique,
            args.independent,
            edge_prob=Fraction(args.edge_prob),
            demand=demand,
            weight=weight,
            seed=seed,
            min_degree=args.min_degree,
        )
    elif args.klass == "planar":
        inst = gen_planar(
            args.rows, args.cols, triangulate=args.triangulate,
            demand=demand, weight=weight, seed=seed,
        )
    else:
        inst, coords = gen_unit_disk(
            args.n, box=args.box, demand=demand, weight=weight, seed=seed
        )
        comments += [
            f"# coord {v} {x} {y}" for v, (x, y) in enumerate(coords)
        ]
    doc = InstanceDocument(
        instance=inst,
        realization=realization,
        cotree=cotree,
        comments=tuple(comments),
    )
    _write_out(format_instance_text(doc), args.out)
    return EXIT_OK


def _cmd_reduce(args) -> int:
    doc = _read_document(args.infile)
    g = doc.instance.graph
    header = [f"# edgemon reduce --kind {args.kind} from n={g.n} m={g.m}"]
    if args.kind == "tds":
        image = reduce_tds_to_em(g)
        header.append("# relation gamma_m(image) = gamma_t(source) + 3")
    elif args.kind == "comparability":
        image = reduce_bip_tds_to_comparability(g)
        header.append("# relation gamma_m(image) = gamma_t(source) + 1")
    elif args.kind == "is":
        image = reduce_is_to_em(g, args.k)
        header.append(
            f"# relation gamma_m(image) <= {args.k} iff alpha(source) >= {args.k}"
        )
    else:
        image, _ = reduce_planar_vc_to_udg(g, chain_lengths=args.chain)
        per_edge = 5 * args.chain + 2
        header.append(
            f"# relation gamma_m(image) = vc(source) + {per_edge} * m"
        )
    _write_out(
        format_instance_text(InstanceDocument(instance=image, comments=tuple(header))),
        args.out,
    )
    return EXIT_OK


def _bench_instance(klass: str, seed: int, n: int) -> tuple[Instance, object]:
    if klass == "complete":
        return gen_complete(n, demand=(0, 2), weight=(1, 4, 4), seed=seed), None
    if klass == "block":
        return (
            gen_block_graph([3, 4, 3], demand=(0, 2), weight=(1, 4, 4), seed=seed),
            None,
        )
    if klass == "interval":
        inst, real = gen_interval(n, demand=(0, 2), weight=(1, 4, 4), seed=seed)
        return inst, real
    if klass == "cograph":
        inst, tree = gen_cograph(n, demand=1, weight=(1, 4, 4), seed=seed)
        return inst, tree
    if klass == "planar":
        return gen_planar(3, 3, triangulate=True, demand=(0, 1), seed=seed), None
    raise InputError(f"bench does not support class {klass!r}")


def _cmd_bench(args) -> int:
    lo, hi = (int(s) for s in args.seeds.split("..", 1))
    budget = _budget_from_env()
    print("seed solver oracle ratio ms")
    for seed in range(lo, hi + 1):
        inst, certificate = _bench_instance(args.klass, seed, args.n)
        started = time.perf_counter()
        if args.klass == "complete":
            sol = (
                ptas_complete(inst, Fraction(args.epsilon))
                if args.epsilon
                else solve_complete_cbounded(inst)
            )
        elif args.klass == "block":
            sol = solve_block(inst)
        elif args.klass == "interval":
            sol = solve_interval(inst, certificate)
        elif args.klass == "cograph":
            sol = solve_cograph(inst, certificate)
        else:
            sol = ptas_planar(inst, Fraction(args.epsilon or "1"), budget=budget)
        elapsed = (time.perf_counter() - started) * 1000
        reference = exact_gamma_m(inst, budget=budget)
        if sol.feasible and reference.feasible and reference.value > 0:
            ratio = str(sol.value / reference.value)
        elif sol.feasible and reference.feasible:
            ratio = "1" if sol.value == reference.value else "inf"
        else:
            ratio = "-"
        sval = sol.value if sol.feasible else "inf"
        rval = reference.value if reference.feasible else "inf"
        print(f"{seed} {sval} {rval} {ratio} {elapsed:.1f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgemon",
        description="Weighted edge monitoring solvers and instance tooling.",
    )
    parser.add_argument(
        "--threads", type=int, default=1,
        help="reserved; solvers currently run on one thread",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="exact class-specific solver")
    p_solve.add_argument(
        "--class", dest="klass", default="auto",
        choices=["complete", "block", "interval", "cograph", "split", "auto"],
    )
    p_solve.add_argument("--in", dest="infile", default=None)
    p_solve.set_defaults(func=_cmd_solve)

    p_approx = sub.add_parser("approx", help="approximation schemes")
    p_approx.add_argument(
        "--class", dest="klass", required=True, choices=["complete", "planar"]
    )
    p_approx.add_argument("--epsilon", required=True)
    p_approx.add_argument("--in", dest="infile", default=None)
    p_approx.set_defaults(func=_cmd_approx)

    p_oracle = sub.add_parser("oracle", help="exact branch-and-bound baseline")
    p_oracle.add_argument("--in", dest="infile", default=None)
    p_oracle.set_defaults(func=_cmd_oracle)

    p_verify = sub.add_parser("verify", help="check a vertex-set certificate")
    p_verify.add_argument("--solution", required=True)
    p_verify.add_argument("--in", dest="infile", default=None)
    p_verify.set_defaults(func=_cmd_verify)

    p_gen = sub.add_parser("generate", help="emit a seeded instance")
    p_gen.add_argument(
        "--class", dest="klass", required=True,
        choices=[
            "complete", "block", "interval", "cograph", "split", "planar",
            "unitdisk",
        ],
    )
    p_gen.add_argument("--n", type=int, default=8)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--demand", default="1", help="constant or lo..hi")
    p_gen.add_argument(
        "--weight", default="1", help="constant, or lo..hi:denominator"
    )
    p_gen.add_argument("--blocks", default="3,3", help="block sizes, comma separated")
    p_gen.add_argument("--unit-lengths", action="store_true")
    p_gen.add_argument("--clique", type=int, default=4)
    p_gen.add_argument("--independent", type=int, default=3)
    p_gen.add_argument("--edge-prob", default="1/2")
    p_gen.add_argument("--min-degree", type=int, default=None)
    p_gen.add_argument("--rows", type=int, default=3)
    p_gen.add_argument("--cols", type=int, default=3)
    p_gen.add_argument("--triangulate", action="store_true")
    p_gen.add_argument("--box", type=int, default=10)
    p_gen.add_argument("--out", default=None)
    p_gen.set_defaults(func=_cmd_generate)

    p_red = sub.add_parser("reduce", help="emit a hardness-construction image")
    p_red.add_argument(
        "--kind", required=True, choices=["tds", "is", "comparability", "udg"]
    )
    p_red.add_argument("--k", type=int, default=2)
    p_red.add_argument("--chain", type=int, default=1)
    p_red.add_argument("--in", dest="infile", default=None)
    p_red.add_argument("--out", default=None)
    p_red.set_defaults(func=_cmd_reduce)

    p_bench = sub.add_parser("bench", help="solver vs oracle over seed range")
    p_bench.add_argument(
        "--class", dest="klass", required=True,
        choices=["complete", "block", "interval", "cograph", "planar"],
    )
    p_bench.add_argument("--seeds", default="0..9", help="inclusive range a..b")
    p_bench.add_argument("--n", type=int, default=10)
    p_bench.add_argument("--epsilon", default=None)
    p_bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
