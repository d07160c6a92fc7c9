"""Command-line front end.

Exit codes: 0 ok, 1 verification failed, 2 input error, 3 guarantee not
applicable, 4 base coloring unavailable.
"""

from __future__ import annotations

import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import click

from . import colorgraph, extend2, extend3, instances, io, oracle
from .graph import Graph, GraphError, PrecoloringError, color_count, extends, find_conflict, greedy_extend, pairs_within, validate_precoloring

SCHEMA = 1
EXIT_VERIFY, EXIT_INPUT, EXIT_NOT_APPLICABLE, EXIT_NO_BASE = 1, 2, 3, 4


class Abort(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load(graph_path: str, pre_path: str | None) -> tuple[Graph, dict[int, int]]:
    try:
        g = io.read_graph(graph_path)
        d = io.load_precoloring(Path(pre_path).read_text(), g.n) if pre_path else {}
        validate_precoloring(g, d)
    except (OSError, io.FormatError, GraphError, PrecoloringError) as exc:
        raise Abort(f"{exc}", EXIT_INPUT) from exc
    return g, d


def _resolve_r(g: Graph, r: int | None) -> int:
    if r is not None:
        return r
    return max(1, oracle.chromatic_number(g)[0])


def _emit(data: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        click.echo(json.dumps({"schema": SCHEMA, **data}, indent=2, sort_keys=True))
    else:
        for line in lines:
            click.echo(line)


def _run(fn):
    try:
        fn()
    except Abort as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(exc.code)


@click.group()
def main() -> None:
    """Precoloring extension under distance constraints."""


def hypotheses(g: Graph, d: dict[int, int], r: int, k: int) -> tuple[dict, list[dict]]:
    p = set(d)
    counts = {f"d{i}": len(pairs_within(g, p, i)) for i in (1, 2, 3)}
    top = max(d.values(), default=0)
    rows = []
    k3 = extend3.min_classes(counts["d3"])
    rows.append({
        "theorem": "distance-3",
        "quantity": "|D(P,3)|",
        "value": counts["d3"],
        "bound": k3 * (k3 + 1) // 2,
        "strict": False,
        "satisfied": top <= r + 1,
        "margin": k3 * (k3 + 1) // 2 - counts["d3"],
        "k": k3,
        "budget": r + k3,
        "note": None if top <= r + 1 else f"precolors exceed r+1 = {r + 1}",
    })
    e, rep = extend2.analyze_distance2(g, d, r, k)
    for quantity, value in (("|D(P,2)|", rep.pairs_d2), ("weight", rep.weight)):
        rows.append({
            "theorem": f"distance-2 {rep.theorem}",
            "quantity": quantity,
            "value": value,
            "bound": rep.bound,
            "strict": True,
            "satisfied": rep.bound is not None and value < rep.bound and top <= r + k,
            "margin": None if rep.bound is None else rep.bound - value,
            "k": k,
            "budget": rep.budget,
            "note": None if top <= r + k else f"precolors exceed r+k = {r + k}",
        })
    info = {
        "n": g.n,
        "p": len(p),
        **counts,
        "phi": [list(t) for t in e.phi_table()],
        "weight": rep.weight,
        "r": r,
        "k": k,
    }
    return info, rows


def _default_k(d: dict[int, int], r: int) -> int:
    return max(1, max(d.values(), default=0) - r)


@main.command()
@click.argument("graph", type=click.Path())
@click.argument("precoloring", type=click.Path())
@click.option("--r", "r", type=int, help="Chromatic bound; solved exactly if omitted.")
@click.option("--k", "k", type=int, help="Extra colors for the distance-2 check (default: from precolors).")
@click.option("--json", "as_json", is_flag=True)
def analyze(graph, precoloring, r, k, as_json):
    """Report distance-pair counts and which extension guarantees apply."""

    def go():
        g, d = _load(graph, precoloring)
        rr = _resolve_r(g, r)
        kk = k if k is not None else _default_k(d, rr)
        info, rows = hypotheses(g, d, rr, kk)
        lines = [
            f"|P| = {info['p']}",
            f"|D(P,1)| = {info['d1']}  |D(P,2)| = {info['d2']}  |D(P,3)| = {info['d3']}",
            f"r = {rr}  k = {kk}  weight = {info['weight']}",
            "phi: " + (", ".join(f"{i}-{j}:{c}" for i, j, c in info["phi"]) or "(all zero)"),
        ]
        for row in rows:
            rel = "<" if row["strict"] else "<="
            state = "satisfied" if row["satisfied"] else "violated"
            margin = f" (margin {row['margin']})" if row["margin"] is not None else ""
            if row["note"]:
                state = f"not applicable: {row['note']}"
                margin = ""
            lines.append(
                f"{row['theorem']}: {row['quantity']} = {row['value']} {rel} {row['bound']}? "
                f"{state}{margin}; k = {row['k']}, budget {row['budget']} colors"
            )
        _emit({**info, "hypotheses": rows}, as_json, lines)

    _run(go)


def _base_coloring(g: Graph, spec: str, r: int | None) -> tuple[dict[int, int], int]:
    if spec != "solve":
        try:
            base = io.load_coloring(Path(spec).read_text(), g.n)
        except (OSError, io.FormatError) as exc:
            raise Abort(str(exc), EXIT_INPUT) from exc
        rr = r if r is not None else max(base.values(), default=1)
        if find_conflict(g, base) is not None or max(base.values(), default=1) > rr:
            raise Abort(f"base coloring is not a proper {rr}-coloring", EXIT_NO_BASE)
        return base, rr
    if r is None:
        rr, base = oracle.chromatic_number(g)
        return base, max(rr, 1)
    base = oracle.exact_k_colorable(g, r)
    if base is None:
        raise Abort(f"graph is not {r}-colorable", EXIT_NO_BASE)
    return base, r


def _try_d3(g, d, base, r, k):
    if max(d.values(), default=0) > r + 1:
        raise extend2.GuaranteeNotApplicable("distance-3 route needs precolors in 1..r+1", None)
    try:
        f = extend3.extend_distance3(g, d, base, k=k, r=r)
    except extend3.BudgetError as exc:
        raise extend2.GuaranteeNotApplicable(str(exc), None) from exc
    kk = k if k is not None else extend3.min_classes(len(pairs_within(g, d, 3)))
    return f, {"theorem": "distance-3", "k": kk, "budget": r + kk}


def _try_d2(g, d, base, r, k):
    kk = k if k is not None else _default_k(d, r)
    f, rep = extend2.extend_distance2(g, d, base, r, kk)
    return f, {"theorem": f"distance-2 {rep.theorem}", "k": kk, "budget": rep.budget, "report": rep.to_json()}


@main.command()
@click.argument("graph", type=click.Path())
@click.argument("precoloring", type=click.Path())
@click.option("--base", "base_spec", default="solve", show_default=True, help="Base r-coloring file, or 'solve'.")
@click.option("--r", "r", type=int)
@click.option("--k", "k_opt", default="auto", show_default=True)
@click.option("--strategy", type=click.Choice(["d3", "d2", "auto"]), default="auto", show_default=True)
@click.option("--fallback", type=click.Choice(["greedy", "none"]), default="none", show_default=True)
@click.option("--out", type=click.Path(), help="Where to write the coloring.")
@click.option("--json", "as_json", is_flag=True)
def extend(graph, precoloring, base_spec, r, k_opt, strategy, fallback, out, as_json):
    """Extend a precoloring using the distance-3 or distance-2 construction."""

    def go():
        g, d = _load(graph, precoloring)
        base, rr = _base_coloring(g, base_spec, r)
        try:
            k = None if k_opt == "auto" else int(k_opt)
        except ValueError:
            raise Abort(f"--k must be an integer or 'auto', got {k_opt!r}", EXIT_INPUT) from None
        order = _strategy_order(g, d, rr, k, strategy)
        result, tried = None, []
        for name in order:
            runner = _try_d3 if name == "d3" else _try_d2
            try:
                f, info = runner(g, d, base, rr, k)
            except extend2.GuaranteeNotApplicable as exc:
                tried.append({"strategy": name, "error": str(exc)})
                continue
            except (ValueError, PrecoloringError) as exc:
                raise Abort(str(exc), EXIT_INPUT) from exc
            result = (name, f, info)
            break
        outside = False
        if result is None:
            if fallback != "greedy":
                msg = "; ".join(f"{t['strategy']}: {t['error']}" for t in tried)
                raise Abort(f"no guarantee applies ({msg})", EXIT_NOT_APPLICABLE)
            result = ("greedy", greedy_extend(g, d), {"theorem": None, "budget": None})
            outside = True
        name, f, info = result
        # self-check before anything is written
        assert find_conflict(g, f) is None and extends(f, d)
        if out:
            Path(out).write_text(io.save_assignment(f, f"strategy {name}"))
        data = {
            "strategy": name,
            "r": rr,
            "colors_used": color_count(f),
            "max_color": max(f.values(), default=0),
            "outside_guarantee": outside,
            "tried": tried,
            "considered": order,
            **info,
        }
        lines = [
            f"strategy: {name}" + (" (outside guarantee)" if outside else ""),
            f"theorem: {info.get('theorem')}",
            f"colors used: {data['colors_used']} (max id {data['max_color']}, budget {info.get('budget')})",
        ]
        if out:
            lines.append(f"wrote {out}")
        _emit(data, as_json, lines)

    _run(go)


def _strategy_order(g, d, r, k, strategy) -> list[str]:
    if strategy != "auto":
        return [strategy]
    top = max(d.values(), default=0)
    k2 = k if k is not None else _default_k(d, r)
    b2 = extend2.budget(r, k2)
    if top > r + 1:
        return ["d2"]
    k3 = k if k is not None else extend3.min_classes(len(pairs_within(g, d, 3)))
    return ["d3", "d2"] if r + k3 < b2 else ["d2", "d3"]


def _verify_one(graph: str, coloring: str, pre: str | None) -> tuple[bool, str]:
    g, d = _load(graph, pre)
    try:
        f = io.load_coloring(Path(coloring).read_text(), g.n)
    except (OSError, io.FormatError) as exc:
        raise Abort(str(exc), EXIT_INPUT) from exc
    bad = find_conflict(g, f)
    if bad is not None:
        return False, f"{coloring}: edge {bad[0] + 1}-{bad[1] + 1} is monochromatic"
    if not extends(f, d):
        return False, f"{coloring}: does not extend the precoloring"
    return True, f"{coloring}: ok, {color_count(f)} colors"


@main.command()
@click.argument("graph", required=False, type=click.Path())
@click.argument("coloring", required=False, type=click.Path())
@click.option("--pre", "pre", type=click.Path(), help="Precoloring the coloring must extend.")
@click.option("--dir", "directory", type=click.Path(file_okay=False), help="Check every NAME.col with NAME.coloring (and NAME.pre if present).")
def verify(graph, coloring, pre, directory):
    """Check that a coloring is proper (and extends a precoloring)."""

    def go():
        if directory:
            jobs = []
            for col in sorted(Path(directory).glob("*.col")):
                stem = col.with_suffix("")
                cpath = stem.with_suffix(".coloring")
                if cpath.exists():
                    ppath = stem.with_suffix(".pre")
                    jobs.append((str(col), str(cpath), str(ppath) if ppath.exists() else None))
            with ThreadPoolExecutor() as pool:
                results = list(pool.map(lambda j: _verify_one(*j), jobs))
            for _, msg in results:
                click.echo(msg)
            if not all(ok for ok, _ in results):
                sys.exit(EXIT_VERIFY)
            return
        if not graph or not coloring:
            raise Abort("verify needs GRAPH and COLORING, or --dir", EXIT_INPUT)
        ok, msg = _verify_one(graph, coloring, pre)
        click.echo(msg)
        if not ok:
            sys.exit(EXIT_VERIFY)

    _run(go)


@main.command("oracle")
@click.argument("graph", type=click.Path())
@click.argument("precoloring", type=click.Path())
@click.option("--cap", type=int, required=True)
@click.option("--out", type=click.Path())
def oracle_cmd(graph, precoloring, cap, out):
    """Exact minimum number of colors 1..m extending the precoloring."""

    def go():
        g, d = _load(graph, precoloring)
        try:
            found = oracle.min_extension_colors(g, d, cap)
        except ValueError as exc:
            raise Abort(str(exc), EXIT_INPUT) from exc
        if found is None:
            click.echo(f"none <= {cap}")
            return
        m, f = found
        click.echo(f"minimum colors: {m}")
        if out:
            Path(out).write_text(io.save_assignment(f, f"oracle m={m}"))

    _run(go)


@main.command()
@click.argument("kind", type=click.Choice(["sharpness-even", "sharpness-odd", "random"]))
@click.option("--r", "r", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--q", "q", type=int, help="Part size for sharpness instances (default r+k).")
@click.option("--n", "n", type=int, default=30, show_default=True)
@click.option("--edge-prob", type=float, default=0.2, show_default=True)
@click.option("--p-size", type=int, default=6, show_default=True)
@click.option("--max-d2", type=int)
@click.option("--max-d3", type=int)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", "prefix", required=True, help="Output prefix: writes PREFIX.col, .pre, .json, .base.coloring")
def gen(kind, r, k, q, n, edge_prob, p_size, max_d2, max_d3, seed, prefix):
    """Generate a tightness instance or a seeded random instance."""

    def go():
        try:
            if kind == "random":
                inst = instances.gen_random(r, k, n, edge_prob, p_size, max_d2, max_d3, seed=seed)
            else:
                maker = instances.gen_sharpness_even if kind == "sharpness-even" else instances.gen_sharpness_odd
                inst = maker(r, k, q if q is not None else r + k)
        except (ValueError, instances.GenerationError) as exc:
            raise Abort(str(exc), EXIT_INPUT) from exc
        io.write_graph(f"{prefix}.col", inst.graph)
        Path(f"{prefix}.pre").write_text(io.save_assignment(inst.d, f"{kind} precoloring"))
        Path(f"{prefix}.base.coloring").write_text(io.save_assignment(inst.base, f"witness {r}-coloring"))
        meta = {"schema": SCHEMA, "kind": kind, "seed": seed if kind == "random" else None, **inst.metadata(),
                "base": f"{prefix}.base.coloring"}
        Path(f"{prefix}.json").write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")
        click.echo(f"wrote {prefix}.col ({inst.graph.n} vertices, |P| = {len(inst.p)}, |D(P,2)| = {inst.expected['d2']})")

    _run(go)


@main.command()
@click.option("--n", "n", type=int, required=True)
def factorize(n):
    """Print the circle-method 1-factorization of K_n (1-indexed pairs)."""

    def go():
        try:
            factors = colorgraph.one_factorization(n)
        except ValueError as exc:
            raise Abort(str(exc), EXIT_INPUT) from exc
        for factor in factors:
            click.echo(" ".join(f"{u + 1}-{v + 1}" for u, v in factor))

    _run(go)


if __name__ == "__main__":
    main()
