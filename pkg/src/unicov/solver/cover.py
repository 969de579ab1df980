"""
Covering numbers cov(A; E) = min{|X| : E is contained in A + X}.

The exact solver is a depth-first branch and bound on the element-based set
cover formulation. Translates are Python int bitmasks over E; identical
translates (A periodic) are merged keeping the smallest shift.
"""

import math
from dataclasses import dataclass

import numpy as np
from loguru import logger

from unicov.core.config import settings
from unicov.core.enums.cover import CoverStatus
from unicov.dto.cover import CoverWitness
from unicov.group.group import Group
from unicov.sets.group_set import GroupSet, same_group
from unicov.sets.operations import difference_set, translate
from unicov.solver.exceptions import IndeterminateCoverError, InfeasibleCoverError


def greedy_upper_bound(order: int, size: int) -> float:
    """(N/|A|)(log|A| + 1) + 1, the guarantee of the greedy cover."""
    return order / size * (math.log(size) + 1) + 1


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _to_mask(bits: np.ndarray) -> int:
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


@dataclass
class _Instance:
    group: Group
    shifts: list[int]
    masks: list[int]
    target: int
    size: int

    def witness(self, chosen: tuple[int, ...]) -> GroupSet:
        return GroupSet.from_elements(self.group, [self.shifts[c] for c in chosen])


def _instance(a: GroupSet, e: GroupSet) -> _Instance:
    seen: dict[int, int] = {}
    shifts: list[int] = []
    masks: list[int] = []
    for x in range(a.group.order):
        mask = _to_mask(translate(a, x).bits & e.bits)
        if mask and mask not in seen:
            seen[mask] = x
            shifts.append(x)
            masks.append(mask)
    return _Instance(a.group, shifts, masks, _to_mask(e.bits), len(a))


def _greedy(inst: _Instance) -> tuple[int, ...]:
    uncovered = inst.target
    chosen: list[int] = []
    while uncovered:
        gains = [(m & uncovered).bit_count() for m in inst.masks]
        best = int(np.argmax(gains))
        chosen.append(best)
        uncovered &= ~inst.masks[best]
    return tuple(chosen)


def _trivial(a: GroupSet, e: GroupSet) -> CoverWitness | None:
    if e.is_empty():
        return CoverWitness(
            status=CoverStatus.OPTIMAL,
            value=0,
            witness=GroupSet.empty(a.group),
            optimal=True,
            upper_bound=0,
        )
    if a.is_empty():
        return CoverWitness(status=CoverStatus.INFEASIBLE, notes={"reason": "empty set"})
    return None


def cov_greedy(a: GroupSet, e: GroupSet | None = None) -> CoverWitness:
    """Greedy cover: take the translate covering most uncovered elements, ties by smallest shift."""
    e = GroupSet.full(a.group) if e is None else e
    same_group(a, e)
    trivial = _trivial(a, e)
    if trivial is not None:
        return trivial

    inst = _instance(a, e)
    chosen = _greedy(inst)
    return CoverWitness(
        status=CoverStatus.FEASIBLE,
        value=len(chosen),
        witness=inst.witness(chosen),
        optimal=False,
        lower_bound=math.ceil(len(e) / len(a)),
        upper_bound=len(chosen),
        notes={"greedy_bound": greedy_upper_bound(a.group.order, len(a))},
    )


class _Search:
    """Call-local branch and bound state."""

    def __init__(self, a: GroupSet, e: GroupSet, inst: _Instance, node_budget: int) -> None:
        self.inst = inst
        self.node_budget = node_budget
        self.nodes = 0
        self.size = len(a)

        self.candidates = [0] * a.group.order
        for c, mask in enumerate(inst.masks):
            for el in _bits(mask):
                self.candidates[el] |= 1 << c

        self.conflicts: list[int] | None = None
        if a.group.order <= settings.PACKING_ORDER_CAP:
            # e and f can share a translate iff f - e lies in A - A.
            diffs = difference_set(a, a)
            self.conflicts = [_to_mask(translate(diffs, x).bits & e.bits) for x in range(a.group.order)]

    def lower_bound(self, uncovered: int) -> int:
        bound = -(-uncovered.bit_count() // self.size)
        if self.conflicts is None:
            return bound
        packed, blocked = 0, 0
        rest = uncovered
        while rest:
            low = rest & -rest
            el = low.bit_length() - 1
            rest ^= low
            if not blocked >> el & 1:
                packed += 1
                blocked |= self.conflicts[el]
        return max(bound, packed)

    def _branch_element(self, uncovered: int, banned: int, first: bool) -> tuple[int, int] | None:
        if first:
            el = (uncovered & -uncovered).bit_length() - 1
            return el, self.candidates[el] & ~banned
        best: tuple[int, int] | None = None
        best_count = -1
        rest = uncovered
        while rest:
            low = rest & -rest
            el = low.bit_length() - 1
            rest ^= low
            avail = self.candidates[el] & ~banned
            count = avail.bit_count()
            if count <= 1:
                return el, avail
            if best is None or count < best_count:
                best, best_count = (el, avail), count
        return best

    def run(
        self, incumbent: tuple[int, ...], root: tuple[int, tuple[int, ...]]
    ) -> tuple[tuple[int, ...], bool, int]:
        masks = self.inst.masks
        best = incumbent
        root_uncovered, root_chosen = root
        root_bound = len(root_chosen) + self.lower_bound(root_uncovered)
        stack: list[tuple[int, tuple[int, ...], int]] = [(root_uncovered, root_chosen, 0)]
        first = True

        while stack:
            if self.nodes >= self.node_budget:
                return best, False, root_bound
            uncovered, chosen, banned = stack.pop()
            self.nodes += 1

            if not uncovered:
                if len(chosen) < len(best):
                    best = chosen
                    logger.debug(f"Incumbent improved to {len(best)} after {self.nodes} nodes")
                continue
            if len(chosen) + self.lower_bound(uncovered) >= len(best):
                continue

            picked = self._branch_element(uncovered, banned, first and root_chosen == ())
            first = False
            if picked is None:
                continue
            _, avail = picked
            options = _bits(avail)
            if not options:
                continue
            options.sort(key=lambda c: (-(masks[c] & uncovered).bit_count(), self.inst.shifts[c]))

            children = []
            tried = banned
            for c in options:
                children.append((uncovered & ~masks[c], chosen + (c,), tried))
                tried |= 1 << c
            stack.extend(reversed(children))

        return best, True, len(best)


def cov_exact(
    a: GroupSet, e: GroupSet | None = None, *, node_budget: int | None = None
) -> CoverWitness:
    """Minimum number of translates of A covering E (default G), with an optimality certificate."""
    e = GroupSet.full(a.group) if e is None else e
    group = same_group(a, e)
    node_budget = settings.NODE_BUDGET if node_budget is None else node_budget
    trivial = _trivial(a, e)
    if trivial is not None:
        return trivial

    inst = _instance(a, e)
    greedy = _greedy(inst)
    floor = math.ceil(len(e) / len(a))

    if group.order > settings.EXACT_ORDER_CAP:
        logger.warning(
            f"|G| = {group.order} is above the exact cap {settings.EXACT_ORDER_CAP}; returning greedy"
        )
        return CoverWitness(
            status=CoverStatus.INDETERMINATE,
            value=len(greedy),
            witness=inst.witness(greedy),
            lower_bound=floor,
            upper_bound=len(greedy),
        )

    search = _Search(a, e, inst, node_budget)
    if e.is_full():
        # Translating a cover keeps it a cover, so some optimal X contains 0.
        zero = inst.shifts.index(0)
        root = (inst.target & ~inst.masks[zero], (zero,))
    else:
        root = (inst.target, ())

    best, exhausted, bound = search.run(greedy, root)
    lower = max(floor, bound if not exhausted else len(best))
    if exhausted or lower >= len(best):
        status, optimal, lower = CoverStatus.OPTIMAL, True, len(best)
    else:
        logger.warning(
            f"Node budget {node_budget} exhausted: cov in [{lower}, {len(best)}]"
        )
        status, optimal = CoverStatus.INDETERMINATE, False

    return CoverWitness(
        status=status,
        value=len(best),
        witness=inst.witness(best),
        optimal=optimal,
        lower_bound=lower,
        upper_bound=len(best),
        nodes_explored=search.nodes,
    )


def cov_value(a: GroupSet, e: GroupSet | None = None, *, node_budget: int | None = None) -> int:
    """cov(A; E) as a certified integer."""
    result = cov_exact(a, e, node_budget=node_budget)
    if result.status is CoverStatus.INFEASIBLE:
        raise InfeasibleCoverError("No translates of the empty set cover a nonempty target")
    if not result.optimal:
        raise IndeterminateCoverError(
            f"cov only bracketed in [{result.lower_bound}, {result.upper_bound}]"
        )
    return int(result.value)
