"""Step-by-step construction of doubly fractal sequences.

A constructed sequence grows block by block.  A block runs from a
leading 1 to the next occurrence of the largest main term n; the main
terms 1..n form the first block, and the second block rewrites them
with one fresh value woven after each main term except n.

Every later block is derived from a merge of two "seam" windows that
both predict the stretch separating the new block's n from its n+1:

* the seam seen from below: the values strictly between the last n-1
  and the last n, each raised by 1 (lower trimming maps the new seam
  back onto that window);
* the seam seen from above: the previous block's seam verbatim, the
  values strictly between that block's closing n and the following
  first occurrence of n+1 (upper trimming maps the new seam onto it).

The two windows agree except that the one from below carries a single
fresh-class value and the one from above carries a single 1.  Merging
them interleaves both specials into the shared common order.  When the
two specials compete for the same slot the merge genuinely forks, and a
:class:`Branch` choice is required; every choice is logged so runs are
reproducible.

The merged seam is cut at its 1: the part before the 1 is appended to
the sequence, and the signed offset between the 1 and the fresh-class
value dictates where fresh values are woven into the next block (offset
-d places each fresh value d positions after its main term, positive
offsets place it before).  A weave position is used only if it falls
inside the developing block, between its leading 1 and its final n.

Rather than trusting any of this blindly, every completed extension is
re-validated with the doubly-fractal prefix checker and rejected loudly
if it fails.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence, Union

from .seqcore import annotate_ranks, check_doubly_fractal_prefix


class Branch(Enum):
    """Order choice when the two seam specials compete for one slot."""

    ONE_FIRST = 0
    FRESH_FIRST = 1


class ConstructionError(ValueError):
    """A construction step was invalid or produced a non-fractal prefix."""


@dataclass
class ConstructionState:
    """Mutable state of one construction run.

    ``block_starts`` holds the 1-based index of each block's leading 1;
    ``fresh`` is always 1 + max(terms); ``branch_log`` records the
    Branch taken at every genuine fork, in order.
    """

    n: int
    terms: list[int]
    block_starts: list[int]
    fresh: int
    branch_log: list[Branch] = field(default_factory=list)

    @property
    def blocks(self) -> int:
        return len(self.block_starts)

    def clone(self) -> "ConstructionState":
        return ConstructionState(self.n, list(self.terms), list(self.block_starts),
                                 self.fresh, list(self.branch_log))


def init_ramp(n: int) -> ConstructionState:
    """Start a construction from the ramp seed (1, 2, ..., n)."""
    if not isinstance(n, int) or n < 2:
        raise ConstructionError(f"need n >= 2, got {n!r}")
    return ConstructionState(n, list(range(1, n + 1)), [1], n + 1)


def extend_second_block(state: ConstructionState) -> ConstructionState:
    """Write the forced second block (1, n+1, 2, n+2, ..., n-1, 2n-1, n)."""
    n = state.n
    if state.blocks != 1 or state.terms != list(range(1, n + 1)):
        raise ConstructionError("second block can only follow the bare seed")
    block: list[int] = []
    for m in range(1, n):
        block += [m, n + m]
    block.append(n)
    state.terms += block
    state.block_starts.append(n + 1)
    state.fresh = 2 * n
    _validate(state, "second block")
    return state


def _last_index(terms: Sequence[int], value: int, before: Optional[int] = None) -> Optional[int]:
    hi = len(terms) if before is None else before
    for k in range(hi - 1, -1, -1):
        if terms[k] == value:
            return k
    return None


def seam_below(state: ConstructionState) -> list[int]:
    """The coming seam as predicted by lower trimming.

    Values strictly between the last occurrence of n-1 and the last
    occurrence of n, each raised by 1.
    """
    _require_blocks(state, 2)
    a = _last_index(state.terms, state.n - 1)
    b = _last_index(state.terms, state.n)
    if a is None or b is None or a >= b:
        raise ConstructionError("malformed state: cannot locate the closing mains")
    return [x + 1 for x in state.terms[a + 1:b]]


def seam_above(state: ConstructionState) -> list[int]:
    """The coming seam as predicted by upper trimming.

    The previous block's seam verbatim: the values strictly between
    that block's closing n and the following first occurrence of n+1.
    """
    _require_blocks(state, 2)
    b = _last_index(state.terms, state.n + 1)
    if b is None:
        raise ConstructionError("malformed state: no occurrence of n+1")
    a = _last_index(state.terms, state.n, before=b)
    if a is None:
        raise ConstructionError("malformed state: no n before the last n+1")
    return state.terms[a + 1:b]


def _require_blocks(state: ConstructionState, k: int) -> None:
    if state.blocks < k:
        raise ConstructionError(f"need at least {k} blocks, have {state.blocks}")


@dataclass(frozen=True)
class SeamMerge:
    """Outcome of merging the two seam windows.

    ``merged`` restricted to non-1 values equals ``below``, and
    restricted to everything but ``fresh_value`` equals ``above``.
    ``offset`` is (1-based position of 1) - (position of fresh_value)
    within ``merged``.
    """

    below: tuple[int, ...]
    above: tuple[int, ...]
    fresh_value: int
    pos_fresh: int  # 1-based position of fresh_value in `below`
    pos_one: int    # 1-based position of 1 in `above`
    merged: tuple[int, ...]
    offset: int

    @property
    def carry(self) -> tuple[int, ...]:
        """The part of the merged seam before its 1; appended verbatim."""
        return self.merged[:self.merged.index(1)]


def _merge_positions(below: Sequence[int], above: Sequence[int]):
    if any(x < 2 for x in below):
        raise ConstructionError(f"seam from below contains a 1: {list(below)}")
    if above.count(1) != 1:
        raise ConstructionError(f"seam from above must contain exactly one 1: {list(above)}")
    common = [x for x in above if x != 1]
    candidates = [k for k in range(len(below))
                  if list(below[:k]) + list(below[k + 1:]) == common]
    if not candidates:
        raise ConstructionError(
            f"seam windows do not share a common order: {list(below)} vs {list(above)}")
    fresh_value = below[candidates[0]]
    if below.count(fresh_value) != 1:
        raise ConstructionError(
            f"fresh-class value {fresh_value} repeats in the seam: {list(below)}")
    return common, candidates[0], above.index(1), fresh_value


def needs_branch(state: ConstructionState) -> bool:
    """True when the next extension step genuinely forks."""
    below, above = seam_below(state), seam_above(state)
    _, gap_fresh, gap_one, _ = _merge_positions(below, above)
    return gap_fresh == gap_one


def merge_seams(below: Sequence[int], above: Sequence[int],
                branch: Optional[Branch] = None) -> SeamMerge:
    """Interleave the two seam windows into one merged seam.

    ``branch`` must be given exactly when the two special values target
    the same slot; otherwise the merge is forced and ``branch`` must be
    None.
    """
    below, above = list(below), list(above)
    common, gap_fresh, gap_one, fresh_value = _merge_positions(below, above)
    if gap_fresh == gap_one:
        if branch is None:
            raise ConstructionError("merge is ambiguous here: a Branch is required")
        pair = [1, fresh_value] if branch is Branch.ONE_FIRST else [fresh_value, 1]
        merged = common[:gap_fresh] + pair + common[gap_fresh:]
    else:
        if branch is not None:
            raise ConstructionError("merge is forced here: no Branch may be given")
        if gap_one < gap_fresh:
            merged = (common[:gap_one] + [1] + common[gap_one:gap_fresh]
                      + [fresh_value] + common[gap_fresh:])
        else:
            merged = (common[:gap_fresh] + [fresh_value] + common[gap_fresh:gap_one]
                      + [1] + common[gap_one:])
    offset = merged.index(1) - merged.index(fresh_value)
    return SeamMerge(tuple(below), tuple(above), fresh_value,
                     gap_fresh + 1, gap_one + 1, tuple(merged), offset)


def _weave_forward(replay: Sequence[int], n: int, gap: int) -> list[Optional[int]]:
    """Replay a block, dropping a None slot `gap` positions after each main term.

    Slots are absolute positions in the output; a scheduled slot beyond
    the final replayed term (the block's closing n) is discarded, which
    is exactly the in-block bound on weave positions.
    """
    out: list[Optional[int]] = []
    sched: set[int] = set()
    k = 0
    while k < len(replay):
        pos = len(out) + 1
        if pos in sched:
            sched.discard(pos)
            out.append(None)
            continue
        term = replay[k]
        k += 1
        out.append(term)
        if term <= n:
            sched.add(len(out) + gap)
    return out


def _weave(replay: Sequence[int], n: int, offset: int) -> list[Optional[int]]:
    if offset == 0:
        raise ConstructionError("zero weave offset")
    if offset < 0:
        return _weave_forward(replay, n, -offset)
    # Positive offset puts fresh values before their mains; run the same
    # walk on the reversed block, where "before" becomes "after".  Slots
    # discarded at the reversed end are those falling before the leading 1.
    rev = _weave_forward(list(reversed(replay)), n, offset)
    rev.reverse()
    return rev


def extend_next_block(state: ConstructionState,
                      branch: Optional[Branch] = None) -> ConstructionState:
    """Run one full extension step: merge seams, append the carry, weave
    the next block, validate the result."""
    _require_blocks(state, 2)
    plan = merge_seams(seam_below(state), seam_above(state), branch)
    replay = state.terms[state.block_starts[-1] - 1:]
    state.terms += plan.carry
    if plan.carry:
        state.fresh = max(state.fresh, max(plan.carry) + 1)
    new_start = len(state.terms) + 1
    woven = _weave(replay, state.n, plan.offset)
    inserted = 0
    for slot in woven:
        if slot is None:
            state.terms.append(state.fresh + inserted)
            inserted += 1
        else:
            state.terms.append(slot)
    state.fresh += inserted
    state.block_starts.append(new_start)
    if branch is not None:
        state.branch_log.append(branch)
    _validate(state, f"block {state.blocks}")
    return state


def _validate(state: ConstructionState, step: str) -> None:
    report = check_doubly_fractal_prefix(state.terms)
    if not report.ok:
        raise ConstructionError(
            f"{step} broke the doubly-fractal property at index "
            f"{report.first_violation_index} (upper_ok={report.upper_ok}, "
            f"lower_ok={report.lower_ok})")


# ---------------------------------------------------------------------------
# Drivers


BranchSpec = Union[None, Branch, Sequence[Branch]]


def _branch_feed(branches: BranchSpec):
    """Turn a branch policy into a per-fork supplier.

    None defaults every fork to ONE_FIRST; a single Branch repeats; an
    explicit sequence is consumed in fork order and must cover every
    fork encountered.
    """
    if branches is None:
        return lambda: Branch.ONE_FIRST
    if isinstance(branches, Branch):
        return lambda: branches
    queue = list(branches)

    def supply() -> Branch:
        if not queue:
            raise ConstructionError("branch list exhausted: the construction "
                                    "forked more often than choices were given")
        return queue.pop(0)

    return supply


def construct_ramp(n: int, blocks: int, branches: BranchSpec = None) -> list[int]:
    """Build ``blocks`` blocks from the ramp seed (1, 2, ..., n)."""
    state = construct_ramp_state(n, blocks, branches)
    return list(state.terms)


def construct_ramp_state(n: int, blocks: int,
                         branches: BranchSpec = None) -> ConstructionState:
    if not isinstance(blocks, int) or blocks < 1:
        raise ConstructionError(f"need blocks >= 1, got {blocks!r}")
    supply = _branch_feed(branches)
    state = init_ramp(n)
    if blocks >= 2:
        extend_second_block(state)
    for _ in range(3, blocks + 1):
        extend_next_block(state, supply() if needs_branch(state) else None)
    return state


def enumerate_ramp(n: int, blocks: int) -> list[tuple[tuple[Branch, ...], list[int]]]:
    """All branch-resolved outcomes, as (branch path, terms) pairs.

    Paths are listed with ONE_FIRST explored first, so the output order
    is the binary order of the fork choices.
    """
    if not isinstance(blocks, int) or blocks < 1:
        raise ConstructionError(f"need blocks >= 1, got {blocks!r}")
    state = init_ramp(n)
    if blocks >= 2:
        extend_second_block(state)
    results: list[tuple[tuple[Branch, ...], list[int]]] = []

    def explore(st: ConstructionState, remaining: int) -> None:
        if remaining == 0:
            results.append((tuple(st.branch_log), list(st.terms)))
            return
        if needs_branch(st):
            for choice in (Branch.ONE_FIRST, Branch.FRESH_FIRST):
                explore(extend_next_block(st.clone(), choice), remaining - 1)
        else:
            explore(extend_next_block(st, None), remaining - 1)

    explore(state, max(0, blocks - 2))
    return results


def construct_ones(n: int, length: int, branches: BranchSpec = None) -> list[int]:
    """Build the ones-seeded companion sequence (1 repeated n times, then 2, ...).

    The ramp-seeded sequence with the same n and branch choices is grown
    until it covers ``length`` terms, and each of its terms is replaced
    by its occurrence rank.  The rank stream starts with n ones followed
    by a 2, so the seed needs no special-casing.
    """
    if not isinstance(length, int) or length < 1:
        raise ConstructionError(f"need length >= 1, got {length!r}")
    supply = _branch_feed(branches)
    state = init_ramp(n)
    if len(state.terms) < length:
        extend_second_block(state)
    while len(state.terms) < length:
        extend_next_block(state, supply() if needs_branch(state) else None)
    return [t.rank for t in annotate_ranks(state.terms[:length])]
