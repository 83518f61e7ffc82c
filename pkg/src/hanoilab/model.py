"""Pegs, discs, states, and move legality for generalized Tower of Hanoi models.

A model couples a directed move graph over the three pegs (which peg-to-peg
moves are permitted at all) with a placement distance C >= 0 (how much larger
than a disc below it a disc may be).  The classical puzzle is the complete
graph with C = 0; keeping the graph but raising C relaxes placement, keeping
C = 0 but removing edges restricts movement, and the engine supports the
product of both axes.

The distance rule is enforced pairwise: a disc must be within C of *every*
disc below it on the same peg, not only its immediate neighbour.  The check
is isolated in `can_place` / `stack_is_legal` so the alternative
adjacent-only reading could be swapped in at a single point.

All values are immutable and all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

PEGS = (1, 2, 3)


def third_peg(i: int, j: int) -> int:
    """The peg that is neither `i` nor `j`."""
    return 6 - i - j


def _check_peg(value: int) -> int:
    if value not in (1, 2, 3):
        raise ValueError(f"peg must be one of 1, 2, 3; got {value!r}")
    return value


class Move(NamedTuple):
    """A single move: take the topmost disc of `src` and drop it onto `dst`."""

    src: int
    dst: int

    def __str__(self) -> str:
        return f"{self.src}>{self.dst}"


MoveSequence = list[Move]

Stack = tuple[int, ...]


class MalformedStateError(ValueError):
    """State is structurally broken: duplicated, missing, or non-positive discs."""


class IllegalMoveError(ValueError):
    """A move that violates a placement rule.

    `reason` is one of ``"empty-source"``, ``"missing-edge"``,
    ``"distance-violation"``.  `index` is the 1-based position of the
    offending move when the error is raised while replaying a sequence.
    """

    def __init__(self, move: Move, reason: str, index: int | None = None) -> None:
        self.move = Move(*move)
        self.reason = reason
        self.index = index
        where = f" at index {index}" if index is not None else ""
        super().__init__(f"illegal move {self.move}{where}: {reason}")


@dataclass(frozen=True)
class MoveGraph:
    """Directed graph of permitted peg-to-peg moves on the three pegs."""

    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        for i, j in self.edges:
            _check_peg(i)
            _check_peg(j)
            if i == j:
                raise ValueError(f"self-loop {i}>{j} is not a move")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]]) -> "MoveGraph":
        return cls(frozenset((int(i), int(j)) for i, j in edges))

    @classmethod
    def complete(cls) -> "MoveGraph":
        return cls.from_edges((i, j) for i in PEGS for j in PEGS if i != j)

    @classmethod
    def parse(cls, text: str) -> "MoveGraph":
        """Parse a comma-separated edge list like ``"1>2, 2>3, 3>1"``.

        Whitespace is ignored.  Self-loops, duplicate edges, and pegs
        outside {1,2,3} are rejected.
        """
        cleaned = "".join(text.split())
        if not cleaned:
            raise ValueError("empty edge list")
        edges: set[tuple[int, int]] = set()
        for part in cleaned.split(","):
            pieces = part.split(">")
            if len(pieces) != 2 or not pieces[0].isdigit() or not pieces[1].isdigit():
                raise ValueError(f"bad edge {part!r}: expected i>j with pegs in 1..3")
            i, j = int(pieces[0]), int(pieces[1])
            _check_peg(i)
            _check_peg(j)
            if i == j:
                raise ValueError(f"self-loop {part!r} is not a move")
            if (i, j) in edges:
                raise ValueError(f"duplicate edge {part!r}")
            edges.add((i, j))
        return cls(frozenset(edges))

    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    def format(self) -> str:
        return ",".join(f"{i}>{j}" for i, j in self.sorted_edges())

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self.edges

    def is_strongly_connected(self) -> bool:
        # On three nodes any existing path shortens to at most two hops.
        return all(
            self.has_edge(i, j)
            or (self.has_edge(i, third_peg(i, j)) and self.has_edge(third_peg(i, j), j))
            for i in PEGS
            for j in PEGS
            if i != j
        )

    def relabel(self, perm: dict[int, int]) -> "MoveGraph":
        return MoveGraph.from_edges((perm[i], perm[j]) for i, j in self.edges)

    def is_swap_invariant(self, src: int, tgt: int) -> bool:
        """True if swapping `src` and `tgt` maps the edge set onto itself."""
        sigma = {src: tgt, tgt: src, third_peg(src, tgt): third_peg(src, tgt)}
        return all((sigma[i], sigma[j]) in self.edges for i, j in self.edges)

    def is_mirror_closed(self, src: int, tgt: int) -> bool:
        """True if every edge's mirror image (src/tgt swapped, direction
        reversed) is also an edge; required for mirrored move sequences to
        stay legal."""
        sigma = {src: tgt, tgt: src, third_peg(src, tgt): third_peg(src, tgt)}
        return all((sigma[j], sigma[i]) in self.edges for i, j in self.edges)


@dataclass(frozen=True)
class Model:
    """A move graph plus the placement distance C."""

    graph: MoveGraph
    distance: int = 0

    def __post_init__(self) -> None:
        if self.distance < 0:
            raise ValueError("model distance must be >= 0")

    @classmethod
    def classical(cls) -> "Model":
        return cls(MoveGraph.complete(), 0)

    @classmethod
    def relaxed(cls, distance: int) -> "Model":
        """Complete move graph with placement distance `distance`."""
        return cls(MoveGraph.complete(), distance)

    @classmethod
    def digraph(cls, graph: MoveGraph) -> "Model":
        """Classical placement rule restricted to the moves of `graph`."""
        return cls(graph, 0)


@dataclass(frozen=True)
class State:
    """Three disc stacks, bottom to top.  Disc k has size k."""

    stacks: tuple[Stack, Stack, Stack]

    @property
    def n(self) -> int:
        return sum(len(s) for s in self.stacks)

    def stack(self, peg: int) -> Stack:
        return self.stacks[_check_peg(peg) - 1]

    def peg_of(self, disc: int) -> int:
        for peg in PEGS:
            if disc in self.stacks[peg - 1]:
                return peg
        raise ValueError(f"disc {disc} is not in the state")

    def validate(self) -> None:
        """Raise MalformedStateError unless the discs are exactly 1..n."""
        seen = sorted(d for s in self.stacks for d in s)
        if seen != list(range(1, len(seen) + 1)):
            raise MalformedStateError(f"discs must be exactly 1..n, got {seen}")


def standard_state(n: int, peg: int) -> State:
    """All `n` discs on `peg`, largest at the bottom; the other pegs empty."""
    if n < 0:
        raise ValueError("disc count must be >= 0")
    _check_peg(peg)
    stacks: list[Stack] = [(), (), ()]
    stacks[peg - 1] = tuple(range(n, 0, -1))
    return State((stacks[0], stacks[1], stacks[2]))


def can_place(disc: int, stack: Stack, distance: int) -> bool:
    """True if `disc` may be dropped on top of `stack` under distance C.

    Pairwise rule: `disc` must be within C of every disc already in the
    stack, which reduces to a comparison against the stack minimum.
    """
    return not stack or disc <= min(stack) + distance


def stack_is_legal(stack: Stack, distance: int) -> bool:
    """True if every disc is within `distance` of every disc below it."""
    lowest: int | None = None
    for disc in stack:
        if lowest is not None:
            if disc > lowest + distance:
                return False
            lowest = min(lowest, disc)
        else:
            lowest = disc
    return True


def is_legal_state(model: Model, state: State) -> bool:
    """True iff every stack satisfies the pairwise distance rule.

    A malformed state (duplicate or missing discs) raises
    MalformedStateError rather than returning False.
    """
    state.validate()
    return all(stack_is_legal(s, model.distance) for s in state.stacks)


def legal_moves(model: Model, state: State) -> list[Move]:
    """All moves legal in `state`, in lexicographic (src, dst) order."""
    moves = []
    for i, j in model.graph.sorted_edges():
        src = state.stacks[i - 1]
        if src and can_place(src[-1], state.stacks[j - 1], model.distance):
            moves.append(Move(i, j))
    return moves


def apply(model: Model, state: State, move: Move) -> State:
    """Apply one move, returning a new state; the input is unchanged.

    Raises IllegalMoveError carrying the violated rule.  The state is
    assumed well-formed; structural validation is the caller's concern.
    """
    i, j = move
    _check_peg(i)
    _check_peg(j)
    src = state.stacks[i - 1]
    if not src:
        raise IllegalMoveError(Move(i, j), "empty-source")
    if not model.graph.has_edge(i, j):
        raise IllegalMoveError(Move(i, j), "missing-edge")
    disc = src[-1]
    dst = state.stacks[j - 1]
    if dst and disc > min(dst) + model.distance:
        raise IllegalMoveError(Move(i, j), "distance-violation")
    stacks = list(state.stacks)
    stacks[i - 1] = src[:-1]
    stacks[j - 1] = dst + (disc,)
    return State((stacks[0], stacks[1], stacks[2]))


def apply_all(model: Model, state: State, seq: Iterable[Move]) -> State:
    """Replay a whole sequence; on failure the error names the 1-based
    index of the first illegal move and the violated rule."""
    for index, move in enumerate(seq, start=1):
        try:
            state = apply(model, state, move)
        except IllegalMoveError as err:
            raise IllegalMoveError(err.move, err.reason, index=index) from None
    return state


def mirror_state(state: State, src: int, tgt: int) -> State:
    """Swap the stacks of `src` and `tgt`; the third peg is unchanged."""
    if src == tgt:
        raise ValueError("src and tgt must differ")
    stacks = list(state.stacks)
    stacks[src - 1], stacks[tgt - 1] = stacks[tgt - 1], stacks[src - 1]
    return State((stacks[0], stacks[1], stacks[2]))


def mirror_move(move: Move, src: int, tgt: int) -> Move:
    """Relabel pegs by the src/tgt swap and reverse the move's direction.

    (x -> y) maps to (sigma(y) -> sigma(x)); the swap fixes the third peg.
    """
    if src == tgt:
        raise ValueError("src and tgt must differ")
    aux = third_peg(src, tgt)
    sigma = {src: tgt, tgt: src, aux: aux}
    return Move(sigma[move.dst], sigma[move.src])


def mirror_sequence(seq: Iterable[Move], src: int, tgt: int) -> list[Move]:
    """Reverse the sequence and mirror each move; applying this twice
    returns the original sequence."""
    return [mirror_move(move, src, tgt) for move in reversed(list(seq))]


def remove_disc(state: State, disc: int) -> State:
    """Drop one disc from wherever it sits.

    Under the pairwise distance rule, removing the largest disc from a
    legal state always leaves a legal state.
    """
    stacks = list(state.stacks)
    for k in range(3):
        if disc in stacks[k]:
            stacks[k] = tuple(d for d in stacks[k] if d != disc)
            return State((stacks[0], stacks[1], stacks[2]))
    raise ValueError(f"disc {disc} is not in the state")
