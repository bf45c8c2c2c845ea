"""Finite presentations of the weight/order data.

A profile presents a countable totally ordered index set I together with an
integral weight: classes of equal weight value are listed explicitly in a
finite body, and eventually-patterned behaviour on either side is captured by
cyclic tails.  Each class carries a shape describing its internal order type:
``Plain`` classes are ordered like a subset of the positive integers, and
``Split`` classes consist of an A-part ordered like a subset of the negative
integers followed by a B-part ordered like the positive integers (the wedge
set of a Fock module is the union of the A-parts).

Two quotients of the class set matter: the classes themselves (one per weight
value) and their runs, where adjacent classes belong to one run exactly when
only finitely many elements separate them.  The functionals ``h`` and
``h_inf`` count class-interval and run-interval lengths on zero-sum class
vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Optional, Union

from .errors import (
    BadTailStep,
    EmptyClass,
    NoSuchClass,
    NonDecreasingValues,
    NonZeroSum,
    NotFockProfile,
    ProfileError,
)


class _Omega:
    """Countably infinite extent."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "omega"

    def __reduce__(self):
        return (_Omega, ())


OMEGA = _Omega()

Extent = Union[int, _Omega]


def is_finite(e: Extent) -> bool:
    return not isinstance(e, _Omega)


def ext_to_json(e: Extent):
    return "omega" if not is_finite(e) else e


def ext_from_json(v) -> Extent:
    if v == "omega":
        return OMEGA
    if isinstance(v, int) and not isinstance(v, bool) and v >= 0:
        return v
    raise ProfileError(f"bad extent: {v!r}")


@dataclass(frozen=True)
class Plain:
    size: Extent

    def total(self) -> Extent:
        return self.size


@dataclass(frozen=True)
class Split:
    a_size: Extent
    b_size: Extent

    def total(self) -> Extent:
        if not is_finite(self.a_size) or not is_finite(self.b_size):
            return OMEGA
        return self.a_size + self.b_size


ClassShape = Union[Plain, Split]


def terminal_part_finite(shape: ClassShape) -> bool:
    if isinstance(shape, Plain):
        return is_finite(shape.size)
    return is_finite(shape.b_size)


def initial_part_finite(shape: ClassShape) -> bool:
    if isinstance(shape, Plain):
        return True
    return is_finite(shape.a_size)


def classes_merge(left: ClassShape, right: ClassShape) -> bool:
    """Adjacent classes lie in one run iff finitely many elements separate
    any section choices: the left class must end finitely and the right class
    must begin finitely."""
    return terminal_part_finite(left) and initial_part_finite(right)


@dataclass(frozen=True)
class ClassSpec:
    value: int
    shape: ClassShape


@dataclass(frozen=True)
class TailSpec:
    start_value: int
    step_per_class: int
    shapes: tuple[ClassShape, ...]

    def value_at(self, n: int) -> int:
        return self.start_value + (n - 1) * self.step_per_class

    def shape_at(self, n: int) -> ClassShape:
        return self.shapes[(n - 1) % len(self.shapes)]


@dataclass(frozen=True)
class WeightProfile:
    body: tuple[ClassSpec, ...]
    left_tail: Optional[TailSpec] = None
    right_tail: Optional[TailSpec] = None

    @property
    def n_body(self) -> int:
        return len(self.body)


@dataclass(frozen=True, order=True)
class ClassKey:
    """Key into the class list: side is -1 (left tail), 0 (body), +1 (right
    tail); n is the body index (side 0) or the outward tail ordinal (n >= 1).

    The dataclass ordering is *not* the profile order; use class_position."""

    side: int
    n: int

    def __repr__(self):
        return {-1: f"L{self.n}", 0: f"B{self.n}", 1: f"R{self.n}"}[self.side]


def Left(n: int) -> ClassKey:
    return ClassKey(-1, n)


def Body(i: int) -> ClassKey:
    return ClassKey(0, i)


def Right(n: int) -> ClassKey:
    return ClassKey(1, n)


def classkey_to_str(key: ClassKey) -> str:
    return {-1: f"left:{key.n}", 0: f"body:{key.n}", 1: f"right:{key.n}"}[key.side]


def classkey_from_str(s: str) -> ClassKey:
    side_s, _, n_s = s.partition(":")
    sides = {"left": -1, "body": 0, "right": 1}
    if side_s not in sides or not n_s.lstrip("-").isdigit():
        raise NoSuchClass(f"bad class key string: {s!r}")
    return ClassKey(sides[side_s], int(n_s))


def validate_profile(raw: WeightProfile) -> WeightProfile:
    """Check all profile invariants and return the profile unchanged.

    Values must decrease strictly left to right across leftTail (read
    inward), body, rightTail; every class must be nonempty; tail steps must
    point the right way (right tails decrease, left tails increase outward).
    """
    _validate_structure(raw)

    values = []
    if raw.left_tail is not None:
        if raw.left_tail.step_per_class < 1:
            raise BadTailStep("left tail step must be >= 1")
        values.append(raw.left_tail.start_value)
    for spec in raw.body:
        values.append(spec.value)
    if raw.right_tail is not None:
        if raw.right_tail.step_per_class > -1:
            raise BadTailStep("right tail step must be <= -1")
        values.append(raw.right_tail.start_value)
    for a, b in zip(values, values[1:]):
        if a <= b:
            raise NonDecreasingValues(
                f"class values must strictly decrease (saw {a} then {b})"
            )
    return raw


def _validate_structure(raw: WeightProfile) -> None:
    """Shape/extent sanity shared with the dual-input path (which permits
    increasing values prior to negation)."""
    if not raw.body and raw.left_tail is None and raw.right_tail is None:
        raise EmptyClass("profile has no classes")
    for where, spec in enumerate(raw.body):
        _check_shape(spec.shape, f"body class {where}")
    for name, tail in (("left", raw.left_tail), ("right", raw.right_tail)):
        if tail is None:
            continue
        if not tail.shapes:
            raise EmptyClass(f"{name} tail has no shapes")
        for k, shape in enumerate(tail.shapes):
            _check_shape(shape, f"{name} tail shape {k}")


def _check_shape(shape: ClassShape, where: str) -> None:
    if isinstance(shape, Plain):
        if is_finite(shape.size) and shape.size < 1:
            raise EmptyClass(f"{where}: plain class must have size >= 1")
    elif isinstance(shape, Split):
        for part in (shape.a_size, shape.b_size):
            if is_finite(part) and part < 0:
                raise EmptyClass(f"{where}: negative part size")
        if is_finite(shape.a_size) and is_finite(shape.b_size):
            if shape.a_size + shape.b_size < 1:
                raise EmptyClass(f"{where}: split class must have size >= 1")
    else:
        raise ProfileError(f"{where}: unknown shape {shape!r}")


def has_class(profile: WeightProfile, key: ClassKey) -> bool:
    if key.side == 0:
        return 0 <= key.n < profile.n_body
    if key.side == -1:
        return profile.left_tail is not None and key.n >= 1
    return profile.right_tail is not None and key.n >= 1


def _require(profile: WeightProfile, key: ClassKey) -> None:
    if not has_class(profile, key):
        raise NoSuchClass(f"no class {key} in profile")


def class_value(profile: WeightProfile, key: ClassKey) -> int:
    _require(profile, key)
    if key.side == 0:
        return profile.body[key.n].value
    tail = profile.left_tail if key.side == -1 else profile.right_tail
    return tail.value_at(key.n)


def class_shape(profile: WeightProfile, key: ClassKey) -> ClassShape:
    _require(profile, key)
    if key.side == 0:
        return profile.body[key.n].shape
    tail = profile.left_tail if key.side == -1 else profile.right_tail
    return tail.shape_at(key.n)


def class_position(profile: WeightProfile, key: ClassKey) -> int:
    """Coordinate of the class inside the order on classes: Body(i) at i,
    Left(n) at -n, Right(n) after the body."""
    _require(profile, key)
    if key.side == -1:
        return -key.n
    if key.side == 0:
        return key.n
    return profile.n_body - 1 + key.n


def key_at_position(profile: WeightProfile, pos: int) -> ClassKey:
    if pos < 0:
        key = Left(-pos)
    elif pos < profile.n_body:
        key = Body(pos)
    else:
        key = Right(pos - profile.n_body + 1)
    _require(profile, key)
    return key


def min_class_position(profile: WeightProfile) -> Optional[int]:
    """Smallest class coordinate, or None when a left tail makes it -inf."""
    if profile.left_tail is not None:
        return None
    return 0 if profile.body else profile.n_body  # body empty => Right(1) at 0


def max_class_position(profile: WeightProfile) -> Optional[int]:
    if profile.right_tail is not None:
        return None
    if profile.body:
        return profile.n_body - 1
    return -1  # only a left tail: Left(1)


def window_positions(profile: WeightProfile, depth: int) -> list[int]:
    """Class coordinates of the window spanning the whole body plus `depth`
    classes into each tail."""
    lo = -depth if profile.left_tail is not None else 0
    if profile.body:
        hi = profile.n_body - 1 + (depth if profile.right_tail is not None else 0)
    elif profile.right_tail is not None:
        hi = profile.n_body - 1 + depth
    else:
        hi = -1
        lo = -depth
    return list(range(lo, hi + 1))


def window_keys(profile: WeightProfile, depth: int) -> list[ClassKey]:
    return [key_at_position(profile, p) for p in window_positions(profile, depth)]


# --- runs -------------------------------------------------------------------


def _merge_at(profile: WeightProfile, pos: int) -> bool:
    """Whether the classes at coordinates pos and pos+1 share a run."""
    return classes_merge(
        class_shape(profile, key_at_position(profile, pos)),
        class_shape(profile, key_at_position(profile, pos + 1)),
    )


def _anchor_position(profile: WeightProfile) -> int:
    if profile.body or profile.right_tail is not None:
        return 0
    return -1


def jinf_position(profile: WeightProfile, key: ClassKey) -> int:
    """Integer coordinate of the run containing the class; the run holding
    the class at coordinate 0 (or Left(1) for pure-left profiles) sits at 0."""
    pos = class_position(profile, key)
    anchor = _anchor_position(profile)
    run = 0
    p = anchor
    while p < pos:
        if not _merge_at(profile, p):
            run += 1
        p += 1
    while p > pos:
        if not _merge_at(profile, p - 1):
            run -= 1
        p -= 1
    return run


@dataclass(frozen=True)
class RunTable:
    """Run partition over an expansion window, plus how each tail continues.

    runs: consecutive classes grouped left to right; positions: the run
    coordinate of each group; *_tail_merged: True when the whole infinite
    tail collapses into its innermost run shown here, False when it keeps
    producing new runs forever (None without a tail)."""

    runs: tuple[tuple[ClassKey, ...], ...]
    positions: tuple[int, ...]
    left_tail_merged: Optional[bool]
    right_tail_merged: Optional[bool]


def tail_fully_merges(tail: Optional[TailSpec]) -> Optional[bool]:
    """True iff every adjacent pair of tail classes shares a run, so the tail
    contributes a single run; checked over one full cyclic period."""
    if tail is None:
        return None
    L = len(tail.shapes)
    for k in range(L):
        if not classes_merge(tail.shapes[k], tail.shapes[(k + 1) % L]):
            # order within the *right* tail is shape k then k+1; for the left
            # tail the pair appears reversed, checked by the caller
            return False
    return True


def _left_tail_fully_merges(tail: Optional[TailSpec]) -> Optional[bool]:
    if tail is None:
        return None
    L = len(tail.shapes)
    # moving inward, class n+1 precedes class n; adjacent shapes are
    # (shape_{n}, shape_{n-1}) in profile order
    for k in range(L):
        if not classes_merge(tail.shapes[(k + 1) % L], tail.shapes[k]):
            return False
    return True


def left_tail_merges(profile: WeightProfile) -> Optional[bool]:
    return _left_tail_fully_merges(profile.left_tail)


def right_tail_merges(profile: WeightProfile) -> Optional[bool]:
    return tail_fully_merges(profile.right_tail)


def _expansion_depth(profile: WeightProfile) -> int:
    d = 2
    for tail in (profile.left_tail, profile.right_tail):
        if tail is not None:
            d = max(d, 3 * len(tail.shapes) + 2)
    return d


def jinf_runs(profile: WeightProfile, depth: Optional[int] = None) -> RunTable:
    depth = _expansion_depth(profile) if depth is None else depth
    positions = window_positions(profile, depth)
    runs: list[list[ClassKey]] = []
    run_pos: list[int] = []
    for p in positions:
        key = key_at_position(profile, p)
        if runs and _merge_at(profile, p - 1):
            runs[-1].append(key)
        else:
            runs.append([key])
            run_pos.append(jinf_position(profile, key))
    return RunTable(
        runs=tuple(tuple(r) for r in runs),
        positions=tuple(run_pos),
        left_tail_merged=left_tail_merges(profile),
        right_tail_merged=right_tail_merges(profile),
    )


# --- the interval-counting functionals --------------------------------------


DeltaVector = Mapping[ClassKey, int]


def _linear_sum(profile: WeightProfile, f: DeltaVector, coord) -> int:
    total = 0
    weight = 0
    for key, c in f.items():
        if c == 0:
            continue
        total += c
        weight += c * coord(profile, key)
    if total != 0:
        raise NonZeroSum("delta vector entries must sum to zero")
    return -weight


def h(profile: WeightProfile, f: DeltaVector) -> int:
    """Class-interval functional: on a generator delta_j - delta_j' with
    j before j' this counts the classes strictly between plus one."""
    return _linear_sum(profile, f, class_position)


def h_inf(profile: WeightProfile, f: DeltaVector) -> int:
    """Run-interval functional: the h of the run quotient."""
    return _linear_sum(profile, f, jinf_position)


# --- Fock initiality ---------------------------------------------------------


def all_shapes_split(profile: WeightProfile) -> bool:
    shapes = [spec.shape for spec in profile.body]
    for tail in (profile.left_tail, profile.right_tail):
        if tail is not None:
            shapes.extend(tail.shapes)
    return all(isinstance(s, Split) for s in shapes)


def is_jinf_initial(profile: WeightProfile) -> bool:
    """Whether the union of A-parts meets every run in an initial subset.

    Operationally: no run contains a class with nonempty B-part strictly
    before a class with nonempty A-part.  Violations are always visible in a
    window of three tail periods because runs and shapes repeat periodically.
    """
    if not all_shapes_split(profile):
        raise NotFockProfile("initiality test requires all-split shapes")
    table = jinf_runs(profile)
    for run in table.runs:
        seen_b = False
        for key in run:
            shape = class_shape(profile, key)
            a = shape.a_size if is_finite(shape.a_size) else 1
            b = shape.b_size if is_finite(shape.b_size) else 1
            if seen_b and a > 0:
                return False
            if b > 0:
                seen_b = True
    return True


# --- elements of I ----------------------------------------------------------


PART_A = "A"
PART_B = "B"


@dataclass(frozen=True)
class Position:
    """One element of the index set: a class, a part and a 1-based offset.

    Part-A offsets count leftward from the A/B junction (offset 1 is the
    largest A element); part-B and plain offsets count rightward (offset 1 is
    the smallest element).  Plain classes use part B by convention."""

    key: ClassKey
    part: str
    offset: int


def position_sort_key(profile: WeightProfile, p: Position) -> tuple[int, int]:
    rel = -p.offset if p.part == PART_A else p.offset
    return (class_position(profile, p.key), rel)


def position_value(profile: WeightProfile, p: Position) -> int:
    return class_value(profile, p.key)


def check_position(profile: WeightProfile, p: Position) -> None:
    shape = class_shape(profile, p.key)
    if p.offset < 1:
        raise ProfileError(f"offset must be >= 1: {p}")
    if isinstance(shape, Plain):
        if p.part != PART_B:
            raise ProfileError(f"plain classes use part B: {p}")
        size = shape.size
    else:
        size = shape.a_size if p.part == PART_A else shape.b_size
    if is_finite(size) and p.offset > size:
        raise ProfileError(f"offset {p.offset} exceeds part size {size}: {p}")


# --- JSON --------------------------------------------------------------------


def shape_to_json(shape: ClassShape):
    if isinstance(shape, Plain):
        return {"plain": ext_to_json(shape.size)}
    return {"split": [ext_to_json(shape.a_size), ext_to_json(shape.b_size)]}


def shape_from_json(obj) -> ClassShape:
    if isinstance(obj, dict) and "plain" in obj:
        return Plain(ext_from_json(obj["plain"]))
    if isinstance(obj, dict) and "split" in obj:
        a, b = obj["split"]
        return Split(ext_from_json(a), ext_from_json(b))
    raise ProfileError(f"bad shape: {obj!r}")


def _tail_to_json(tail: Optional[TailSpec]):
    if tail is None:
        return None
    return {
        "start": tail.start_value,
        "step": tail.step_per_class,
        "shapes": [shape_to_json(s) for s in tail.shapes],
    }


def _tail_from_json(obj) -> Optional[TailSpec]:
    if obj is None:
        return None
    return TailSpec(
        start_value=int(obj["start"]),
        step_per_class=int(obj["step"]),
        shapes=tuple(shape_from_json(s) for s in obj["shapes"]),
    )


def profile_to_json(profile: WeightProfile) -> dict:
    out: dict = {
        "body": [
            {"value": spec.value, "shape": shape_to_json(spec.shape)}
            for spec in profile.body
        ]
    }
    if profile.left_tail is not None:
        out["left_tail"] = _tail_to_json(profile.left_tail)
    if profile.right_tail is not None:
        out["right_tail"] = _tail_to_json(profile.right_tail)
    return out


def profile_from_json(obj) -> WeightProfile:
    if not isinstance(obj, dict):
        raise ProfileError("profile document must be an object")
    body = tuple(
        ClassSpec(value=int(c["value"]), shape=shape_from_json(c["shape"]))
        for c in obj.get("body", [])
    )
    return WeightProfile(
        body=body,
        left_tail=_tail_from_json(obj.get("left_tail")),
        right_tail=_tail_from_json(obj.get("right_tail")),
    )


def iter_part_positions(
    profile: WeightProfile, key: ClassKey, part: str
) -> Iterator[Position]:
    """Positions of one part in profile order (A: outward-in, so ascending
    order means descending offset; we yield ascending profile order only for
    finite parts)."""
    shape = class_shape(profile, key)
    if isinstance(shape, Plain):
        if part != PART_B:
            return
        size = shape.size
    else:
        size = shape.a_size if part == PART_A else shape.b_size
    if not is_finite(size):
        raise ProfileError(f"cannot materialize infinite part {key}/{part}")
    if part == PART_A:
        for off in range(size, 0, -1):
            yield Position(key, PART_A, off)
    else:
        for off in range(1, size + 1):
            yield Position(key, PART_B, off)
