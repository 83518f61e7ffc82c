"""Exhaustive breadth-first search over the legal-state graph.

Ground truth for optimality at desk scale: exact minimal move counts,
deterministic witness paths (lexicographically smallest optimal move at
every step), shortest *symmetric* transfers, and the conjecture probe
table.

Two BFS cores share the public API.  For distance 0 the stack order is
forced, so a state packs into a base-3 integer keyed by disc; for
distance >= 1 states are canonical stack tuples.  Visited sets never
truncate silently: exceeding the configured state budget raises.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from . import recurrence
from .model import (
    Model,
    Move,
    MoveGraph,
    Stack,
    State,
    apply_all,
    is_legal_state,
    mirror_sequence,
    standard_state,
)
from .solvers import a_symmetric, directed_move, q_sequence

#: Default visited-set budget; roughly 4 GiB at a couple hundred bytes
#: per stored state.
DEFAULT_STATE_BUDGET = 20_000_000


class SearchCapExceeded(RuntimeError):
    """The search outgrew its state budget; results would be incomplete."""

    def __init__(self, cap: int) -> None:
        self.cap = cap
        super().__init__(f"search exceeded the state budget of {cap} states")


@dataclass(frozen=True)
class SearchResult:
    """Outcome of one search.  `distance` is None when no goal state is
    reachable; a witness path, when present, has length == distance and
    replays cleanly."""

    distance: int | None
    path: tuple[Move, ...] | None
    explored: int
    peak_frontier: int

    @property
    def reachable(self) -> bool:
        return self.distance is not None


@dataclass(frozen=True)
class GoalPredicate:
    """What counts as "done": the standard state on a peg, any legal
    all-on-one-peg state, or one explicit state."""

    kind: str  # "standard" | "all-on" | "exact"
    peg: int | None = None
    state: State | None = None

    @classmethod
    def standard_on(cls, peg: int) -> "GoalPredicate":
        return cls("standard", peg=peg)

    @classmethod
    def all_on(cls, peg: int) -> "GoalPredicate":
        return cls("all-on", peg=peg)

    @classmethod
    def exact(cls, state: State) -> "GoalPredicate":
        return cls("exact", state=state)

    def matches(self, state: State) -> bool:
        if self.kind == "standard":
            return state == standard_state(state.n, self.peg)
        if self.kind == "all-on":
            return all(
                not state.stacks[p - 1] for p in (1, 2, 3) if p != self.peg
            )
        if self.kind == "exact":
            return state == self.state
        raise ValueError(f"unknown goal kind {self.kind!r}")


# ---------------------------------------------------------------------------
# Dense core: distance 0, states packed as base-3 integers (digit per disc).


def pack_state(state: State) -> int:
    """Disc-to-peg assignment as a base-3 code; valid when order is forced."""
    code = 0
    for peg in (1, 2, 3):
        for disc in state.stacks[peg - 1]:
            code += (peg - 1) * 3 ** (disc - 1)
    return code


def unpack_state(code: int, n: int) -> State:
    stacks: list[list[int]] = [[], [], []]
    c = code
    for disc in range(1, n + 1):
        stacks[c % 3].append(disc)
        c //= 3
    return State(tuple(tuple(reversed(s)) for s in stacks))  # type: ignore[arg-type]


def _dense_neighbors(
    code: int, n: int, edges: tuple[tuple[int, int], ...], pow3: list[int]
) -> list[tuple[tuple[int, int], int]]:
    tops = [0, 0, 0]
    c = code
    remaining = 3
    for disc in range(1, n + 1):
        p = c % 3
        c //= 3
        if tops[p] == 0:
            tops[p] = disc
            remaining -= 1
            if remaining == 0:
                break
    out = []
    for i, j in edges:
        d = tops[i - 1]
        if d == 0:
            continue
        t = tops[j - 1]
        if t and t < d:
            continue
        out.append(((i, j), code + (j - i) * pow3[d - 1]))
    return out


def _dense_distances(
    n: int,
    edges: tuple[tuple[int, int], ...],
    start: int,
    goals: set[int],
    max_states: int,
) -> tuple[dict[int, int], int, int]:
    """Level BFS on packed codes until every goal code is found (or the
    component is exhausted).  Returns ({goal: distance}, explored, peak)."""
    pow3 = [3**k for k in range(n)]
    found: dict[int, int] = {}
    remaining = set(goals)
    if start in remaining:
        found[start] = 0
        remaining.discard(start)
    visited = {start}
    frontier = [start]
    level = 0
    peak = 1
    while frontier and remaining:
        level += 1
        nxt = []
        for code in frontier:
            for _, new in _dense_neighbors(code, n, edges, pow3):
                if new not in visited:
                    visited.add(new)
                    nxt.append(new)
                    if new in remaining:
                        found[new] = level
                        remaining.discard(new)
        if len(visited) > max_states:
            raise SearchCapExceeded(max_states)
        frontier = nxt
        peak = max(peak, len(nxt))
    return found, len(visited), peak


def _dense_witness(
    n: int,
    edges: tuple[tuple[int, int], ...],
    start: int,
    goal: int,
    max_states: int,
) -> tuple[int | None, list[Move] | None, int, int]:
    """BFS with full levels retained, then a backward sweep marking states
    on shortest paths, then a forward greedy walk taking the smallest
    optimal move at each step."""
    pow3 = [3**k for k in range(n)]
    if start == goal:
        return 0, [], 1, 1
    levels: list[list[int]] = [[start]]
    dist = {start: 0}
    peak = 1
    goal_level: int | None = None
    while levels[-1] and goal_level is None:
        nxt = []
        d = len(levels)
        for code in levels[-1]:
            for _, new in _dense_neighbors(code, n, edges, pow3):
                if new not in dist:
                    dist[new] = d
                    nxt.append(new)
                    if new == goal:
                        goal_level = d
        if len(dist) > max_states:
            raise SearchCapExceeded(max_states)
        levels.append(nxt)
        peak = max(peak, len(nxt))
    explored = len(dist)
    if goal_level is None:
        return None, None, explored, peak
    on_shortest: list[set[int]] = [set() for _ in range(goal_level + 1)]
    on_shortest[goal_level] = {goal}
    for lvl in range(goal_level - 1, -1, -1):
        marked = on_shortest[lvl + 1]
        keep = on_shortest[lvl]
        for code in levels[lvl]:
            for _, new in _dense_neighbors(code, n, edges, pow3):
                if new in marked:
                    keep.add(code)
                    break
    path: list[Move] = []
    current = start
    for lvl in range(goal_level):
        for mv, new in _dense_neighbors(current, n, edges, pow3):
            if new in on_shortest[lvl + 1]:
                path.append(Move(*mv))
                current = new
                break
        else:  # pragma: no cover - would indicate a marking bug
            raise RuntimeError("witness reconstruction lost the shortest-path set")
    return goal_level, path, explored, peak


# ---------------------------------------------------------------------------
# Sparse core: distance >= 1, states are canonical stack tuples.

Stacks = tuple[Stack, Stack, Stack]


def _sparse_neighbors(
    stacks: Stacks, edges: tuple[tuple[int, int], ...], distance: int
) -> Iterator[tuple[Move, Stacks]]:
    for i, j in edges:
        src = stacks[i - 1]
        if not src:
            continue
        disc = src[-1]
        dst = stacks[j - 1]
        if dst and disc > min(dst) + distance:
            continue
        new = list(stacks)
        new[i - 1] = src[:-1]
        new[j - 1] = dst + (disc,)
        yield Move(i, j), (new[0], new[1], new[2])


def _sparse_distances(
    model: Model,
    start: Stacks,
    match_fns: list[Callable[[Stacks], bool]],
    max_states: int,
) -> tuple[list[int | None], int, int]:
    """Level BFS on stack tuples until every goal predicate has fired."""
    edges = model.graph.sorted_edges()
    C = model.distance
    found: list[int | None] = [None] * len(match_fns)
    remaining = set(range(len(match_fns)))
    for idx, fn in enumerate(match_fns):
        if fn(start):
            found[idx] = 0
            remaining.discard(idx)
    visited = {start}
    frontier = [start]
    level = 0
    peak = 1
    while frontier and remaining:
        level += 1
        nxt = []
        for stacks in frontier:
            for _, new in _sparse_neighbors(stacks, edges, C):
                if new not in visited:
                    visited.add(new)
                    nxt.append(new)
                    for idx in list(remaining):
                        if match_fns[idx](new):
                            found[idx] = level
                            remaining.discard(idx)
        if len(visited) > max_states:
            raise SearchCapExceeded(max_states)
        frontier = nxt
        peak = max(peak, len(nxt))
    return found, len(visited), peak


def _sparse_witness(
    model: Model,
    start: Stacks,
    match: Callable[[Stacks], bool],
    max_states: int,
) -> tuple[int | None, list[Move] | None, int, int]:
    edges = model.graph.sorted_edges()
    C = model.distance
    if match(start):
        return 0, [], 1, 1
    levels: list[list[Stacks]] = [[start]]
    dist: dict[Stacks, int] = {start: 0}
    peak = 1
    goal_level: int | None = None
    goals: set[Stacks] = set()
    while levels[-1] and goal_level is None:
        nxt = []
        d = len(levels)
        for stacks in levels[-1]:
            for _, new in _sparse_neighbors(stacks, edges, C):
                if new not in dist:
                    dist[new] = d
                    nxt.append(new)
                    if match(new):
                        goal_level = d
                        goals.add(new)
        if len(dist) > max_states:
            raise SearchCapExceeded(max_states)
        levels.append(nxt)
        peak = max(peak, len(nxt))
    explored = len(dist)
    if goal_level is None:
        return None, None, explored, peak
    on_shortest: list[set[Stacks]] = [set() for _ in range(goal_level + 1)]
    on_shortest[goal_level] = goals
    for lvl in range(goal_level - 1, -1, -1):
        marked = on_shortest[lvl + 1]
        keep = on_shortest[lvl]
        for stacks in levels[lvl]:
            for _, new in _sparse_neighbors(stacks, edges, C):
                if new in marked:
                    keep.add(stacks)
                    break
    path: list[Move] = []
    current = start
    for lvl in range(goal_level):
        for mv, new in _sparse_neighbors(current, edges, C):
            if new in on_shortest[lvl + 1]:
                path.append(mv)
                current = new
                break
        else:  # pragma: no cover - would indicate a marking bug
            raise RuntimeError("witness reconstruction lost the shortest-path set")
    return goal_level, path, explored, peak


# ---------------------------------------------------------------------------
# Public operations.


def bfs_distance(
    model: Model,
    start: State,
    goal: GoalPredicate,
    *,
    max_states: int = DEFAULT_STATE_BUDGET,
    want_path: bool = True,
) -> SearchResult:
    """Exact minimal number of legal moves from `start` to the goal.

    The witness (when requested) takes the lexicographically smallest
    optimal move at every step, so runs are reproducible byte for byte.
    """
    if not is_legal_state(model, start):
        raise ValueError("start state is not legal under the model")
    n = start.n
    if goal.kind == "exact":
        if goal.state is None or goal.state.n != n:
            raise ValueError("exact goal must have the same disc count as start")
        goal.state.validate()
        if not is_legal_state(model, goal.state):
            # an illegal state is never reached; don't let the packed
            # encoding collapse it onto a legal one
            return SearchResult(None, None, 0, 0)
    if model.distance == 0:
        edges = model.graph.sorted_edges()
        goal_code = (
            pack_state(goal.state)
            if goal.kind == "exact"
            # order is forced at distance 0, so both named goals are the
            # single standard state on the goal peg
            else pack_state(standard_state(n, goal.peg))
        )
        start_code = pack_state(start)
        if want_path:
            d, path, explored, peak = _dense_witness(
                n, edges, start_code, goal_code, max_states
            )
        else:
            found, explored, peak = _dense_distances(
                n, edges, start_code, {goal_code}, max_states
            )
            d, path = found.get(goal_code), None
    else:
        match = _goal_match_fn(goal, n)
        if want_path:
            d, path, explored, peak = _sparse_witness(
                model, start.stacks, match, max_states
            )
        else:
            found, explored, peak = _sparse_distances(
                model, start.stacks, [match], max_states
            )
            d, path = found[0], None
    if d is None and goal.kind != "exact" and model.graph.is_strongly_connected():
        raise RuntimeError(
            "standard and all-on-peg goals must be reachable on a strongly "
            "connected graph; unreachable result indicates an engine bug"
        )
    return SearchResult(d, tuple(path) if path is not None else None, explored, peak)


def _goal_match_fn(goal: GoalPredicate, n: int) -> Callable[[Stacks], bool]:
    if goal.kind == "standard":
        target = standard_state(n, goal.peg).stacks
        return lambda stacks: stacks == target
    if goal.kind == "all-on":
        others = tuple(p - 1 for p in (1, 2, 3) if p != goal.peg)
        a, b = others
        return lambda stacks: not stacks[a] and not stacks[b]
    if goal.kind == "exact":
        target = goal.state.stacks
        return lambda stacks: stacks == target
    raise ValueError(f"unknown goal kind {goal.kind!r}")


@dataclass(frozen=True)
class OptimalityCheck:
    pair: tuple[int, int]
    n: int
    bfs: int
    algorithm: int
    recurrence: int

    @property
    def ok(self) -> bool:
        return self.bfs == self.algorithm == self.recurrence


@dataclass(frozen=True)
class OptimalityReport:
    """Three-way comparison (search / construction / recurrence) for every
    ordered peg pair of one graph at one disc count."""

    graph: MoveGraph
    n: int
    checks: tuple[OptimalityCheck, ...]

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)

    def failures(self) -> tuple[OptimalityCheck, ...]:
        return tuple(check for check in self.checks if not check.ok)


def verify_optimality(
    graph: MoveGraph, n: int, *, max_states: int = DEFAULT_STATE_BUDGET
) -> OptimalityReport:
    """Assert BFS distance == constructed length == recurrence value for
    all six ordered peg pairs at `n` discs (distance-0 model)."""
    if not graph.is_strongly_connected():
        raise ValueError("move graph must be strongly connected")
    table = recurrence.eval_move_counts(graph, n)
    edges = graph.sorted_edges()
    bfs: dict[tuple[int, int], int] = {}
    for src in (1, 2, 3):
        goals = {
            pack_state(standard_state(n, tgt)): tgt for tgt in (1, 2, 3) if tgt != src
        }
        found, _, _ = _dense_distances(
            n, edges, pack_state(standard_state(n, src)), set(goals), max_states
        )
        for code, tgt in goals.items():
            bfs[(src, tgt)] = found[code]
    checks = tuple(
        OptimalityCheck(
            pair,
            n,
            bfs[pair],
            len(directed_move(graph, pair[0], pair[1], n)),
            table.value(pair, n),
        )
        for pair in recurrence.PAIR_ORDER
    )
    return OptimalityReport(graph, n, checks)


def shortest_symmetric(
    model: Model,
    n: int,
    src: int,
    tgt: int,
    *,
    max_states: int = DEFAULT_STATE_BUDGET,
) -> SearchResult:
    """Minimal length of a symmetric legal transfer standard(src) ->
    standard(tgt).

    A symmetric sequence is its own mirrored reverse, so it is determined
    by its first half: an odd solution of length 2m+1 exists iff some
    state W at distance m admits a legal middle move (src>tgt or tgt>src)
    landing exactly on W's mirror image; an even solution of length 2m
    needs W equal to its own mirror (both swapped stacks empty).  Levels
    are scanned outward, even candidates before odd, so the first hit is
    minimal; the second half is the mirrored reverse of the BFS-tree path.
    """
    if src == tgt:
        raise ValueError("src and tgt must differ")
    if not model.graph.is_swap_invariant(src, tgt):
        raise ValueError("move graph is not invariant under the src/tgt swap")
    if not model.graph.is_mirror_closed(src, tgt):
        raise ValueError("move graph is not closed under mirrored moves")
    start = standard_state(n, src)
    if n == 0:
        return SearchResult(0, (), 1, 1)
    edges = model.graph.sorted_edges()
    C = model.distance
    # only self-mirrored moves can sit in the middle of an odd solution,
    # and only when the graph actually has them
    middle_moves = sorted(
        mv
        for mv in (Move(src, tgt), Move(tgt, src))
        if model.graph.has_edge(mv.src, mv.dst)
    )

    def mirror_stacks(stacks: Stacks) -> Stacks:
        new = list(stacks)
        new[src - 1], new[tgt - 1] = new[tgt - 1], new[src - 1]
        return (new[0], new[1], new[2])

    parents: dict[Stacks, tuple[Stacks, Move] | None] = {start.stacks: None}
    frontier: list[Stacks] = [start.stacks]
    peak = 1

    def rebuild(stacks: Stacks) -> list[Move]:
        moves: list[Move] = []
        entry = parents[stacks]
        while entry is not None:
            prev, mv = entry
            moves.append(mv)
            entry = parents[prev]
        moves.reverse()
        return moves

    def finish(half: list[Move], middle: list[Move]) -> SearchResult:
        path = half + middle + mirror_sequence(half, src, tgt)
        final = apply_all(model, start, path)
        assert final == standard_state(n, tgt), "symmetric witness must end standard"
        return SearchResult(len(path), tuple(path), len(parents), peak)

    while frontier:
        for stacks in frontier:  # even candidates: length 2*level
            if stacks == mirror_stacks(stacks):
                return finish(rebuild(stacks), [])
        for stacks in frontier:  # odd candidates: length 2*level + 1
            mirrored = mirror_stacks(stacks)
            for mv in middle_moves:
                source = stacks[mv.src - 1]
                if not source:
                    continue
                disc = source[-1]
                dst = stacks[mv.dst - 1]
                if dst and disc > min(dst) + C:
                    continue
                new = list(stacks)
                new[mv.src - 1] = source[:-1]
                new[mv.dst - 1] = dst + (disc,)
                if (new[0], new[1], new[2]) == mirrored:
                    return finish(rebuild(stacks), [mv])
        nxt: list[Stacks] = []
        for stacks in frontier:
            for mv, new in _sparse_neighbors(stacks, edges, C):
                if new not in parents:
                    parents[new] = (stacks, mv)
                    nxt.append(new)
        if len(parents) > max_states:
            raise SearchCapExceeded(max_states)
        frontier = nxt
        peak = max(peak, len(nxt))
    return SearchResult(None, None, len(parents), peak)


@dataclass(frozen=True)
class ProbeRow:
    n: int
    bfs_std: int
    bfs_any: int
    a_conj: int
    b_conj: int
    len_a_sym: int
    len_q: int

    @property
    def match(self) -> bool:
        return self.bfs_std == self.a_conj and self.bfs_any == self.b_conj


@dataclass(frozen=True)
class ProbeReport:
    """Conjecture probe: oracle optima versus conjectured values and the
    two constructive sequence lengths, one row per disc count.  Rows are
    marked MATCH/MISMATCH without failing the run - the recurrences under
    test are conjectural for distance >= 2."""

    distance: int
    rows: tuple[ProbeRow, ...]

    CSV_HEADER = "n,bfs_std,bfs_any,a_conj,b_conj,len_a_sym,len_q,match"

    def to_csv(self) -> str:
        lines = [self.CSV_HEADER]
        for row in self.rows:
            lines.append(
                f"{row.n},{row.bfs_std},{row.bfs_any},{row.a_conj},{row.b_conj},"
                f"{row.len_a_sym},{row.len_q},"
                f"{'MATCH' if row.match else 'MISMATCH'}"
            )
        return "\n".join(lines) + "\n"


def conjecture_probe(
    C: int,
    n_max: int,
    *,
    src: int = 1,
    tgt: int = 2,
    max_states: int = DEFAULT_STATE_BUDGET,
) -> ProbeReport:
    """Probe the conjectured optima for distance C up to `n_max` discs.

    Both constructive sequences are replayed before being measured, and
    the BFS optimum is asserted to be <= each of their lengths (a
    violation would disprove the search or the replay, not the
    conjecture).
    """
    if C < 1:
        raise ValueError("distance must be >= 1")
    model = Model.relaxed(C)
    a_conj, b_conj = recurrence.conjecture_values(n_max, C)
    rows = []
    for n in range(1, n_max + 1):
        start = standard_state(n, src)
        goal_std = standard_state(n, tgt)
        a_seq = a_symmetric(n, C, src, tgt)
        q_seq = q_sequence(n, C, src, tgt)
        if apply_all(model, start, a_seq) != goal_std:
            raise RuntimeError(f"symmetric construction broke at n={n}")
        if apply_all(model, start, q_seq) != goal_std:
            raise RuntimeError(f"five-step construction broke at n={n}")
        found, _, _ = _sparse_distances(
            model,
            start.stacks,
            [
                _goal_match_fn(GoalPredicate.standard_on(tgt), n),
                _goal_match_fn(GoalPredicate.all_on(tgt), n),
            ],
            max_states,
        )
        bfs_std, bfs_any = found
        if bfs_std is None or bfs_any is None:  # pragma: no cover
            raise RuntimeError("probe goals must be reachable")
        if bfs_std > min(len(a_seq), len(q_seq)) or bfs_any > bfs_std:
            raise RuntimeError(
                f"BFS optimum exceeds a replayed construction at n={n}; "
                "the search is broken"
            )
        rows.append(
            ProbeRow(n, bfs_std, bfs_any, a_conj[n], b_conj[n], len(a_seq), len(q_seq))
        )
    return ProbeReport(C, tuple(rows))
