"""Corpus loading and (graph, alpha) sweeps shared by the CLI and the test suite."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from aalpha import generators
from aalpha.bounds import BoundReport, evaluate_reports
from aalpha.graph import Graph
from aalpha.graph6 import FormatError, parse_edge_list, parse_graph6, read_graph6_lines
from aalpha.invariants import InvariantSet, compute_invariants
from aalpha.spectra import Spectrum, batch_spectra, check_alpha

THREADS_ENV = "AALPHA_THREADS"
SWEEP_CHUNK = 1024


class SourceError(ValueError):
    """A graph source or corpus specification could not be resolved."""


@dataclass(frozen=True)
class Evaluation:
    graph: Graph
    invariants: InvariantSet
    spectrum: Spectrum
    reports: list[BoundReport]


def parse_alpha_grid(spec: str) -> list[float]:
    """``"start:stop:step"`` inclusive of ``stop``; a bare number is a one-point grid."""
    parts = spec.split(":")
    try:
        if len(parts) == 1:
            return [check_alpha(float(parts[0]))]
        start, stop, step = (float(x) for x in parts)
    except ValueError as exc:
        raise SourceError(f"bad alpha grid {spec!r}") from exc
    if step <= 0 or stop < start:
        raise SourceError(f"bad alpha grid {spec!r}")
    count = int(round((stop - start) / step + 1e-9)) + 1
    return [check_alpha(round(start + i * step, 12)) for i in range(count) if start + i * step <= stop + 1e-12]


def _generator_graphs(spec: str) -> list[Graph] | None:
    kind, _, rest = spec.partition(":")
    args = rest.split(":") if rest else []
    try:
        if kind in ("complete", "star", "path", "cycle") and len(args) == 1:
            return [generators.generate_named(kind, int(args[0]))]
        if kind == "complete_bipartite" and len(args) == 2:
            return [generators.complete_bipartite(int(args[0]), int(args[1]))]
        if kind == "circulant" and len(args) == 2:
            return [generators.circulant(int(args[0]), [int(s) for s in args[1].split(",")])]
        if kind == "h" and len(args) == 2:
            return [generators.generate_h(int(args[0]), int(args[1]))]
        if kind == "gnp" and len(args) == 3:
            return [generators.gnp(int(args[0]), float(args[1]), int(args[2]))]
        if kind == "petersen" and not args:
            return [generators.petersen()]
        if kind == "enumerate" and len(args) == 1:
            return list(generators.enumerate_connected(int(args[0])))
    except ValueError as exc:
        raise SourceError(f"bad generator spec {spec!r}: {exc}") from exc
    return None


def _file_graphs(path: Path) -> list[Graph]:
    text = path.read_text(encoding="ascii")
    first = next((ln.split("#", 1)[0].strip() for ln in text.splitlines() if ln.split("#", 1)[0].strip()), "")
    if len(first.split()) == 2:
        return [parse_edge_list(text)]
    return list(read_graph6_lines(text.splitlines()))


def load_source(spec: str) -> list[Graph]:
    """Resolve a generator spec (``star:10``), a file path, or a literal graph6 record."""
    graphs = _generator_graphs(spec)
    if graphs is not None:
        return graphs
    path = Path(spec)
    if path.is_file():
        try:
            return _file_graphs(path)
        except (OSError, UnicodeDecodeError) as exc:
            raise SourceError(f"cannot read {spec}: {exc}") from exc
    try:
        return [parse_graph6(spec)]
    except FormatError as exc:
        raise SourceError(f"{spec!r} is neither a generator spec, a file, nor graph6: {exc}") from exc


def load_corpus(specs: Iterable[str]) -> list[Graph]:
    graphs: list[Graph] = []
    for spec in specs:
        graphs.extend(load_source(spec))
    return graphs


def thread_count() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise SourceError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    return os.cpu_count() or 1


def _evaluate_chunk(graphs: Sequence[Graph], alphas: Sequence[float]) -> list[list[Evaluation]]:
    invs = [compute_invariants(g) for g in graphs]
    out: list[list[Evaluation] | None] = [None] * len(graphs)
    by_order: dict[int, list[int]] = {}
    for idx, g in enumerate(graphs):
        by_order.setdefault(g.n, []).append(idx)
    for idxs in by_order.values():
        w, res = batch_spectra([graphs[i] for i in idxs], alphas)
        for row, i in enumerate(idxs):
            evals = []
            for col, a in enumerate(alphas):
                s = Spectrum(a, w[row, col], float(res[row, col]))
                evals.append(Evaluation(graphs[i], invs[i], s, evaluate_reports(invs[i], s)))
            out[i] = evals
    return out  # type: ignore[return-value]


def sweep(
    graphs: Sequence[Graph], alphas: Sequence[float], threads: int | None = None
) -> Iterator[Evaluation]:
    """Evaluate every bound on every (graph, alpha), in corpus order with alpha inner.

    Chunks run on a thread pool; ``map`` keeps the output order independent
    of scheduling.
    """
    alphas = [check_alpha(a) for a in alphas]
    chunks = [graphs[i : i + SWEEP_CHUNK] for i in range(0, len(graphs), SWEEP_CHUNK)]
    workers = threads or thread_count()
    if workers == 1 or len(chunks) <= 1:
        results = (_evaluate_chunk(c, alphas) for c in chunks)
        for chunk in results:
            for evals in chunk:
                yield from evals
        return
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for chunk in pool.map(lambda c: _evaluate_chunk(c, alphas), chunks):
            for evals in chunk:
                yield from evals
