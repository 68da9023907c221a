"""Command-line front end.

Subcommands cover the whole library surface: validation, penalty
reporting, the guaranteed-size solver, the exact oracle, acts-as
classification, dominating-set verification, graph generation, and a
benchmark harness.  Exit codes: 0 success, 1 a `verify` violation,
2 input or usage errors.
"""

from __future__ import annotations

import csv
import io
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, Tuple

import click

from .exact import acts_as, constraints, dominates, exact_min_domset
from .gadgets import verify_catalog
from .generators import (
    FAMILY_KINDS,
    FamilySpec,
    GenerationError,
    SPORADICS,
    family,
    random_triangulation,
    sporadic,
)
from .ioformats import (
    ParseError,
    encode_planar_code,
    export_svg,
    load_graph,
    write_text,
)
from .penalty import budget, phi
from .plane import EmbeddingError, PlaneGraph, SkeletalView, is_sporadic, validate
from .solver import SolverError, solve


class InputError(click.ClickException):
    exit_code = 2


def _load(path: str, outer: Optional[Tuple[int, int]] = None) -> SkeletalView:
    try:
        g = load_graph(path)
        if outer is not None:
            u, v = outer
            if v not in g.rot.get(u, ()):
                raise InputError(f"--outer {u} {v} is not a dart of the graph")
            g = PlaneGraph({k: list(ns) for k, ns in g.rot.items()}, (u, v))
        return validate(g, "skeletal")
    except (OSError, ParseError, EmbeddingError) as exc:
        raise InputError(str(exc))


def _parse_vertices(spec: str) -> List[int]:
    try:
        return [int(tok) for tok in spec.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"cannot parse vertex list {spec!r}")


_OUTER_OPT = click.option(
    "--outer",
    nargs=2,
    type=int,
    default=None,
    help="Override the outer face: dart U V traced on its left.",
)


@click.group()
def main() -> None:
    """Dominating sets of guaranteed size for plane skeletal triangulations."""


@main.command("validate")
@click.argument("path")
@_OUTER_OPT
def cmd_validate(path: str, outer) -> None:
    """Check the file parses into a valid skeletal triangulation."""
    view = _load(path, outer)
    g = view.graph
    tag = is_sporadic(view)
    edges = sum(len(ns) for ns in g.rot.values()) // 2
    click.echo(
        f"ok: n={g.n} edges={edges} boundary={len(g.outer_walk())}"
        + (f" sporadic={tag}" if tag else "")
    )


@main.command("phi")
@click.argument("path")
@click.option("--root", type=int, default=None, help="Vertex rooting.")
@click.option("--root-edge", nargs=2, type=int, default=None, help="Edge rooting.")
@_OUTER_OPT
def cmd_phi(path: str, root, root_edge, outer) -> None:
    """Print the penalty of the (optionally rooted) graph."""
    view = _load(path, outer)
    if root is not None and root_edge is not None:
        raise InputError("--root and --root-edge are mutually exclusive")
    try:
        if root is not None:
            view = validate(view.graph, "vertex-rooted", (root,))
        elif root_edge is not None:
            view = validate(view.graph, "edge-rooted", tuple(root_edge))
    except EmbeddingError as exc:
        raise InputError(str(exc))
    rep = phi(view)
    click.echo(f"{rep.value:g}")


@main.command("solve")
@click.argument("path")
@click.option("--svg", "svg_out", default=None, help="Write an SVG drawing here.")
@_OUTER_OPT
def cmd_solve(path: str, svg_out, outer) -> None:
    """Compute a dominating set within the penalty budget."""
    view = _load(path, outer)
    try:
        out = solve(view)
    except SolverError as exc:
        raise click.ClickException(str(exc))
    click.echo(f"size: {out.size}")
    click.echo(f"bound: {out.bound}")
    click.echo(f"sporadic: {'true' if out.sporadic else 'false'}")
    click.echo("set: " + " ".join(str(v) for v in sorted(out.dom_set)))
    if svg_out:
        with open(svg_out, "w") as f:
            f.write(export_svg(view, out.dom_set))


@main.command("gamma")
@click.argument("path")
@click.option("--force", multiple=True, type=int, help="Vertex that must be in the set.")
@click.option("--exempt", multiple=True, type=int, help="Vertex that need not be dominated.")
@_OUTER_OPT
def cmd_gamma(path: str, force, exempt, outer) -> None:
    """Exact minimum dominating set from the oracle."""
    view = _load(path, outer)
    g = view.graph
    bad = [v for v in (*force, *exempt) if v not in g.rot]
    if bad:
        raise InputError(f"unknown vertices: {bad}")
    best = exact_min_domset(g, constraints(must=force, exempt=exempt), cap=g.n)
    click.echo(f"gamma: {len(best)}")
    click.echo("set: " + " ".join(str(v) for v in sorted(best)))


@main.command("acts-as")
@click.argument("path")
@click.option("--root", required=True, multiple=True, type=int,
              help="Root vertex; give twice for an edge rooting.")
@_OUTER_OPT
def cmd_acts_as(path: str, root, outer) -> None:
    """Classify a rooted graph by its behaviour under domination."""
    view = _load(path, outer)
    if len(root) not in (1, 2):
        raise InputError("--root takes one vertex or one edge (two vertices)")
    kind = "vertex-rooted" if len(root) == 1 else "edge-rooted"
    try:
        rooted = validate(view.graph, kind, tuple(root))
    except EmbeddingError as exc:
        raise InputError(str(exc))
    res = acts_as(rooted, cap=view.graph.n)
    click.echo(f"kind: {res.kind}")
    click.echo(f"s: {res.s}")


@main.command("verify")
@click.argument("path")
@click.option("--set", "vertex_set", required=True, help="Comma-separated vertices.")
@click.pass_context
@_OUTER_OPT
def cmd_verify(ctx, path: str, vertex_set: str, outer) -> None:
    """Check the given set dominates; exit 1 when it does not."""
    view = _load(path, outer)
    g = view.graph
    s = set(_parse_vertices(vertex_set))
    missing = s - set(g.rot)
    if missing:
        raise InputError(f"unknown vertices: {sorted(missing)}")
    if not dominates(g, s):
        uncovered = sorted(
            v for v in g.rot if v not in s and not s & set(g.rot[v])
        )
        click.echo(f"violation: uncovered vertices {uncovered}")
        ctx.exit(1)
    b = budget(view)
    within = len(s) <= b
    click.echo(f"dominates: true (size {len(s)}, budget {b})")
    if not within:
        click.echo("note: set exceeds the penalty budget")


@main.command("generate")
@click.argument("what")
@click.option("--k", type=int, default=1, help="Family scale parameter.")
@click.option("--n", type=int, default=50, help="Random triangulation size.")
@click.option("--seed", type=int, default=0, help="Random seed.")
@click.option("--format", "fmt", type=click.Choice(["text", "pc"]), default="text")
@click.option("-o", "--output", default=None, help="Write here instead of stdout.")
def cmd_generate(what: str, k: int, n: int, seed: int, fmt: str, output) -> None:
    """Emit a named family member, a sporadic graph, or a random one."""
    try:
        if what == "random":
            view = random_triangulation(n, seed)
        elif what in SPORADICS:
            view = sporadic(what)
        elif what in FAMILY_KINDS:
            view = family(FamilySpec(what, k))
        else:
            raise InputError(
                f"unknown target {what!r}; choose from random, "
                f"{', '.join(SPORADICS)}, {', '.join(sorted(FAMILY_KINDS))}"
            )
    except GenerationError as exc:
        raise InputError(str(exc))
    if fmt == "pc":
        data = encode_planar_code([view.graph])
        if output:
            with open(output, "wb") as f:
                f.write(data)
        else:
            sys.stdout.buffer.write(data)
    else:
        text = write_text(view.graph)
        if output:
            with open(output, "w") as f:
                f.write(text)
        else:
            click.echo(text, nl=False)


def _bench_one(args: Tuple[int, int]) -> Tuple[int, float, int, int, float]:
    n, seed = args
    view = random_triangulation(n, seed)
    half = phi(view).half_units
    t0 = time.perf_counter()
    out = solve(view)
    dt = time.perf_counter() - t0
    return n, half / 2, out.size, out.bound, dt


@main.command("bench")
@click.option("--sizes", default="50,100,200,400", help="Comma-separated n values.")
@click.option("--seeds", default="0,1,2", help="Comma-separated seeds.")
@click.option("--workers", type=int, default=1, help="Parallel worker count.")
def cmd_bench(sizes: str, seeds: str, workers: int) -> None:
    """Time the solver on random triangulations; emit CSV."""
    ns = _parse_vertices(sizes)
    sds = _parse_vertices(seeds)
    jobs = [(n, s) for n in ns for s in sds]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_bench_one, jobs))
    else:
        rows = [_bench_one(j) for j in jobs]
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["n", "phi", "size", "bound", "seconds"])
    for n, half, size, bound, dt in rows:
        w.writerow([n, f"{half:g}", size, bound, f"{dt:.4f}"])
    click.echo(buf.getvalue(), nl=False)


@main.command("check-catalog")
@click.option("--hosts", type=int, default=110, help="Random host trials per gadget.")
@click.option("--seed", type=int, default=0)
def cmd_check_catalog(hosts: int, seed: int) -> None:
    """Re-derive every gadget signature with the oracle."""
    rep = verify_catalog(hosts=hosts, seed=seed)
    click.echo(str(rep))


def cli(argv: Optional[Sequence[int]] = None) -> int:
    """Programmatic entry point returning the exit code."""
    try:
        main.main(args=list(argv) if argv is not None else None,
                  prog_name="tridom", standalone_mode=True)
    except SystemExit as ex:
        code = ex.code
        return code if isinstance(code, int) else (0 if code is None else 1)
    return 0


if __name__ == "__main__":
    sys.exit(cli(sys.argv[1:]))
