"""Membership, bounded enumeration, dominance, linkage and ranks.

Membership tests reduce to class-level count constraints: symmetric powers
obey the staircase bound against the previous class value, exterior powers
only their capacities, and Fock swaps must be one-sided within every class.
The linkage relation moves box mass between runs: nu is linked above gamma
when every surplus unit of nu - gamma sits in a strictly earlier run than a
matching deficit unit, a right-to-left pool scan over runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional

from .elements import (
    KIND_EXT,
    KIND_FOCK,
    KIND_SYM,
    PieriElement,
    ext_element,
    fock_element,
    sym_element,
)
from .errors import (
    CapacityExceeded,
    GlpieriError,
    UnsupportedHypothesis,
)
from .fmodules import (
    EXT,
    FOCK,
    SYM,
    FModuleSpec,
    highest_weight_element,
    is_b_highest_weight,
    validate_module,
)
from .profiles import (
    OMEGA,
    ClassKey,
    Plain,
    Split,
    WeightProfile,
    class_position,
    class_shape,
    class_value,
    is_finite,
    is_jinf_initial,
    jinf_position,
    key_at_position,
    left_tail_merges,
    min_class_position,
    right_tail_merges,
    window_keys,
    h_inf,
)


@dataclass(frozen=True)
class Window:
    """All body classes plus `depth` classes into each tail; for Fock
    profiles the depth also bounds swap counts on infinite parts."""

    depth: int

    def keys(self, profile: WeightProfile) -> list[ClassKey]:
        return window_keys(profile, self.depth)


def default_window(profile: WeightProfile, spec: FModuleSpec) -> Window:
    if spec.base_kind in (SYM, EXT):
        return Window(max(2, spec.d))
    finite_caps = 0
    for s in (c.shape for c in profile.body):
        if isinstance(s, Split):
            if is_finite(s.a_size):
                finite_caps += s.a_size
            if is_finite(s.b_size):
                finite_caps += s.b_size
    return Window(max(2, min(6, finite_caps + 1)))


def _sym_cap(profile: WeightProfile, key: ClassKey) -> Optional[int]:
    """Staircase bound for boxes on this class; None when unconstrained
    (the class is the global minimum of the order)."""
    pos = class_position(profile, key)
    lo = min_class_position(profile)
    if lo is not None and pos == lo:
        return None
    prev = key_at_position(profile, pos - 1)
    return class_value(profile, prev) - class_value(profile, key)


def pieri_contains(profile: WeightProfile, spec: FModuleSpec, e: PieriElement) -> bool:
    """Whether lambda + gamma is dominant, i.e. e labels a constituent."""
    validate_module(profile, spec)
    if e.kind != spec.base_kind:
        raise GlpieriError(f"element kind {e.kind} does not match module {spec.kind}")
    if e.kind == KIND_FOCK:
        for key, (r, s) in e.entries:
            shape = class_shape(profile, key)
            if is_finite(shape.a_size) and r > shape.a_size:
                raise CapacityExceeded(f"{key}: removes {r} from A-part of size {shape.a_size}")
            if is_finite(shape.b_size) and s > shape.b_size:
                raise CapacityExceeded(f"{key}: adds {s} to B-part of size {shape.b_size}")
        return all(r == 0 or s == 0 for _, (r, s) in e.entries)
    if e.total_boxes() != spec.d:
        raise CapacityExceeded(f"element has {e.total_boxes()} boxes, module degree is {spec.d}")
    if e.kind == KIND_EXT:
        for key, c in e.entries:
            size = class_shape(profile, key).size
            if is_finite(size) and c > size:
                raise CapacityExceeded(f"{key}: {c} boxes in class of size {size}")
        return True
    # sym
    for key, c in e.entries:
        class_shape(profile, key)  # raises NoSuchClass
        cap = _sym_cap(profile, key)
        if cap is not None and c > cap:
            return False
    return True


def _range_cap(cap, bound: int) -> int:
    if cap is None or not is_finite(cap):
        return bound
    return min(cap, bound)


def pieri_enumerate(
    profile: WeightProfile, spec: FModuleSpec, window: Window
) -> list[PieriElement]:
    """All Pieri elements supported inside the window, deterministically
    ordered by rank weight and then by support."""
    validate_module(profile, spec)
    keys = window.keys(profile)
    out: list[PieriElement] = []
    if spec.base_kind in (SYM, EXT):
        d = spec.d
        caps = []
        for key in keys:
            if spec.base_kind == SYM:
                caps.append(_range_cap(_sym_cap(profile, key), d))
            else:
                caps.append(_range_cap(class_shape(profile, key).size, d))
        for combo in _bounded_compositions(d, caps):
            counts = {k: c for k, c in zip(keys, combo) if c}
            e = (
                sym_element(counts)
                if spec.base_kind == SYM
                else ext_element(counts)
            )
            out.append(e)
    else:
        per_class = []
        for key in keys:
            shape = class_shape(profile, key)
            # the window depth bounds swap counts only on infinite parts
            rmax = shape.a_size if is_finite(shape.a_size) else window.depth
            smax = shape.b_size if is_finite(shape.b_size) else window.depth
            choices = [(0, 0)]
            choices += [(r, 0) for r in range(1, rmax + 1)]
            choices += [(0, s) for s in range(1, smax + 1)]
            per_class.append(choices)
        for combo in product(*per_class):
            if sum(r for r, _ in combo) != sum(s for _, s in combo):
                continue
            swaps = {k: rs for k, rs in zip(keys, combo) if rs != (0, 0)}
            out.append(fock_element(swaps))
    out.sort(key=lambda e: _sort_key(profile, e))
    return out


def _bounded_compositions(total: int, caps: list[int]) -> Iterable[tuple[int, ...]]:
    if not caps:
        if total == 0:
            yield ()
        return
    head = caps[0]
    for c in range(min(head, total), -1, -1):
        for rest in _bounded_compositions(total - c, caps[1:]):
            yield (c,) + rest


def rank_weight(profile: WeightProfile, e: PieriElement) -> int:
    """Sum of run coordinates over the class-level delta of the element;
    differences of rank weights are linkage ranks."""
    return sum(c * jinf_position(profile, k) for k, c in e.delta().items())


def _sort_key(profile: WeightProfile, e: PieriElement):
    ents = sorted(
        ((class_position(profile, k), v) for k, v in e.entries),
        key=lambda kv: kv[0],
    )
    return (rank_weight(profile, e), tuple(ents))


def linf_rank(
    profile: WeightProfile,
    spec: FModuleSpec,
    ref: PieriElement,
    e: PieriElement,
) -> int:
    """Linkage rank of e relative to ref: zero at ref, increasing as e moves
    downward; equals the run functional on delta(ref) - delta(e)."""
    f: dict[ClassKey, int] = dict(ref.delta())
    for k, c in e.delta().items():
        f[k] = f.get(k, 0) - c
    return h_inf(profile, f)


def reference_element(
    profile: WeightProfile, spec: FModuleSpec, window: Window
) -> PieriElement:
    """Rank origin: F's highest weight element when it exists, otherwise the
    enumeration-first element of the window (ranks are then relative)."""
    if is_b_highest_weight(profile, spec):
        return highest_weight_element(profile, spec)
    elems = pieri_enumerate(profile, spec, window)
    if not elems:
        raise GlpieriError("empty Pieri set in window")
    return elems[0]


# --- dominance ----------------------------------------------------------------


def _position_events(profile: WeightProfile, e: PieriElement, sign: int):
    """Unit contributions of the weight of e at the position level, using the
    canonical within-class placement.  Yields (sortkey, delta) pairs; the
    Fock contribution is relative to the plain wedge weight, which cancels in
    differences."""
    if e.kind == KIND_SYM:
        for key, c in e.entries:
            yield ((class_position(profile, key), 1), sign * c)
    elif e.kind == KIND_EXT:
        for key, c in e.entries:
            p = class_position(profile, key)
            for off in range(1, c + 1):
                yield ((p, off), sign)
    else:
        for key, (r, s) in e.entries:
            p = class_position(profile, key)
            for off in range(1, r + 1):
                yield ((p, -off), -sign)  # removed A-elements
            for off in range(1, s + 1):
                yield ((p, off), sign)  # added B-elements


def dominance_leq(
    profile: WeightProfile,
    spec: FModuleSpec,
    gamma: PieriElement,
    nu: PieriElement,
) -> bool:
    """gamma <= nu in the weight order: nu - gamma is a sum of positive
    roots, i.e. every prefix sum of the position-level difference is
    nonnegative and the total is zero."""
    events: dict[tuple[int, int], int] = {}
    for sk, dv in _position_events(profile, nu, +1):
        events[sk] = events.get(sk, 0) + dv
    for sk, dv in _position_events(profile, gamma, -1):
        events[sk] = events.get(sk, 0) + dv
    running = 0
    for sk in sorted(events):
        running += events[sk]
        if running < 0:
            return False
    return running == 0


# --- linkage ------------------------------------------------------------------


def ggcurly(
    profile: WeightProfile,
    spec: FModuleSpec,
    nu: PieriElement,
    gamma: PieriElement,
) -> bool:
    """Linkage relation: nu - gamma decomposes into unit moves, each from a
    run to a strictly earlier run.  Feasibility is a right-to-left pool scan
    over run-aggregated surplus/deficit masses."""
    if nu == gamma:
        return True
    diff: dict[ClassKey, int] = dict(nu.delta())
    for k, c in gamma.delta().items():
        diff[k] = diff.get(k, 0) - c
    if sum(diff.values()) != 0:
        return False
    pos_mass: dict[int, int] = {}
    neg_mass: dict[int, int] = {}
    for k, c in diff.items():
        if c == 0:
            continue
        r = jinf_position(profile, k)
        if c > 0:
            pos_mass[r] = pos_mass.get(r, 0) + c
        else:
            neg_mass[r] = neg_mass.get(r, 0) - c
    pool = 0
    for r in sorted(set(pos_mass) | set(neg_mass), reverse=True):
        if pos_mass.get(r, 0) > pool:
            return False
        pool -= pos_mass.get(r, 0)
        pool += neg_mass.get(r, 0)
    return True


def linked_by_h_equality(
    profile: WeightProfile,
    spec: FModuleSpec,
    nu: PieriElement,
    gamma: PieriElement,
) -> bool:
    """The alternative linkage predicate: nu strictly dominates gamma and
    the class and run interval counts agree.  Exposed for comparison; reports
    use ggcurly."""
    from .profiles import h as h_fn

    if nu == gamma:
        return True
    if not dominance_leq(profile, spec, gamma, nu):
        return False
    diff: dict[ClassKey, int] = dict(nu.delta())
    for k, c in gamma.delta().items():
        diff[k] = diff.get(k, 0) - c
    return h_fn(profile, diff) == h_inf(profile, diff)


# --- extrema ------------------------------------------------------------------


@dataclass(frozen=True)
class LinfExtrema:
    has_min: bool
    has_max: bool
    cardinality: object  # Extent: int or OMEGA


def _run_inf_masses(profile: WeightProfile):
    """Per expansion run: whether it holds infinitely many A-part (resp.
    B-part) elements, counting omega parts and fully merged tails whose cycle
    carries the part."""
    from .profiles import jinf_runs

    table = jinf_runs(profile)
    inf_a: dict[int, bool] = {}
    inf_b: dict[int, bool] = {}
    for run, pos in zip(table.runs, table.positions):
        a = b = False
        for key in run:
            shape = class_shape(profile, key)
            if isinstance(shape, Split):
                a = a or not is_finite(shape.a_size)
                b = b or not is_finite(shape.b_size)
        inf_a[pos] = a
        inf_b[pos] = b
    lt, rt = profile.left_tail, profile.right_tail
    if lt is not None and left_tail_merges(profile):
        first = min(table.positions)
        if any(isinstance(s, Split) and _part_positive(s.a_size) for s in lt.shapes):
            inf_a[first] = True
        if any(isinstance(s, Split) and _part_positive(s.b_size) for s in lt.shapes):
            inf_b[first] = True
    if rt is not None and right_tail_merges(profile):
        last = max(table.positions)
        if any(isinstance(s, Split) and _part_positive(s.a_size) for s in rt.shapes):
            inf_a[last] = True
        if any(isinstance(s, Split) and _part_positive(s.b_size) for s in rt.shapes):
            inf_b[last] = True
    return inf_a, inf_b


def _part_positive(size) -> bool:
    return not is_finite(size) or size > 0


def _tail_has_part(tail, part: str) -> bool:
    if tail is None:
        return False
    return any(
        isinstance(s, Split)
        and _part_positive(s.a_size if part == "A" else s.b_size)
        for s in tail.shapes
    )


def _fock_unbounded(profile: WeightProfile, upward: bool) -> bool:
    """Whether linkage ranks are unbounded in one direction.

    A unit swap removing an A-element in one class and adding a B-element in
    another gains the run-coordinate difference (target minus source); ranks
    are unbounded above when total gain is, i.e. when sources sit ever lower
    or targets ever higher or infinitely much mass faces each other across a
    run cut.  Downward is the mirror image."""
    lt_nm = left_tail_merges(profile) is False
    rt_nm = right_tail_merges(profile) is False
    low_part, high_part = ("A", "B") if upward else ("B", "A")
    # targets arbitrarily high on the right, or sources arbitrarily low on
    # the left; the partner part exists somewhere by module validity
    if rt_nm and _tail_has_part(profile.right_tail, high_part):
        return True
    if lt_nm and _tail_has_part(profile.left_tail, low_part):
        return True
    inf_a, inf_b = _run_inf_masses(profile)
    positions = sorted(set(inf_a) | set(inf_b))
    # infinitely many disjoint unit pairs with positive gain across the body
    if (
        len(positions) >= 2
        and _tail_has_part(profile.left_tail, low_part)
        and _tail_has_part(profile.right_tail, high_part)
    ):
        return True
    # a run cut with infinite source mass below and infinite target mass above
    lower = inf_a if low_part == "A" else inf_b
    upper = inf_b if high_part == "B" else inf_a
    for i in range(len(positions) - 1):
        below = any(lower[p] for p in positions[: i + 1])
        above = any(upper[p] for p in positions[i + 1 :])
        if below and above:
            return True
    return False


def _stable_rank_set(
    profile: WeightProfile, spec: FModuleSpec, start_depth: int
) -> set[int]:
    prev: Optional[set[int]] = None
    for depth in range(start_depth, start_depth + 10):
        cur = {
            rank_weight(profile, e)
            for e in pieri_enumerate(profile, spec, Window(depth))
        }
        if prev is not None and cur == prev:
            return cur
        prev = cur
    raise GlpieriError("rank set did not stabilize; extrema decision suspect")


def linf_extrema(profile: WeightProfile, spec: FModuleSpec) -> LinfExtrema:
    """Extrema and cardinality of the set of linkage ranks, decided on the
    finite presentation and counted by stable window enumeration when
    finite."""
    validate_module(profile, spec)
    if spec.base_kind == FOCK:
        if not is_jinf_initial(profile):
            raise UnsupportedHypothesis(
                "the wedge set is not initial run by run; structure theory unavailable"
            )
        unbounded_up = _fock_unbounded(profile, upward=True)
        unbounded_down = _fock_unbounded(profile, upward=False)
    else:
        # every class can host a box, so ranks reach every run
        unbounded_up = right_tail_merges(profile) is False
        unbounded_down = left_tail_merges(profile) is False
    has_max = not unbounded_up
    has_min = not unbounded_down
    if unbounded_up or unbounded_down:
        return LinfExtrema(has_min, has_max, OMEGA)
    window = default_window(profile, spec)
    ranks = _stable_rank_set(profile, spec, window.depth)
    return LinfExtrema(has_min, has_max, len(ranks))
