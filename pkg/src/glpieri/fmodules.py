"""Multiplicity-free module specifications and their highest-weight status.

The supported modules are the symmetric and exterior powers of the defining
representation, their duals, and Fock (semi-infinite wedge) modules whose
wedge set is the union of the profile's A-parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .elements import PieriElement, ext_element, fock_element, sym_element
from .errors import (
    ANotInfinite,
    BNotInfinite,
    GlpieriError,
    ModuleError,
    NotDualizable,
    NotHighestWeight,
    ShapeMismatch,
    TooSmallForD,
)
from .profiles import (
    OMEGA,
    ClassKey,
    ClassSpec,
    Plain,
    Split,
    TailSpec,
    WeightProfile,
    _validate_structure,
    class_shape,
    class_value,
    is_finite,
    key_at_position,
    position_sort_key,
    validate_profile,
    Position,
    PART_A,
    PART_B,
)

SYM = "sym"
EXT = "ext"
FOCK = "fock"
SYM_DUAL = "sym_dual"
EXT_DUAL = "ext_dual"

_KINDS = (SYM, EXT, FOCK, SYM_DUAL, EXT_DUAL)


@dataclass(frozen=True)
class FModuleSpec:
    kind: str
    d: Optional[int] = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ModuleError(f"unknown module kind {self.kind!r}")
        if self.kind == FOCK:
            if self.d is not None:
                raise ModuleError("fock modules take no degree")
        else:
            if self.d is None or self.d < 1:
                raise ModuleError(f"{self.kind} needs degree d >= 1")

    @property
    def is_dual(self) -> bool:
        return self.kind in (SYM_DUAL, EXT_DUAL)

    @property
    def base_kind(self) -> str:
        return {SYM_DUAL: SYM, EXT_DUAL: EXT}.get(self.kind, self.kind)


def Sym(d: int) -> FModuleSpec:
    return FModuleSpec(SYM, d)


def Ext(d: int) -> FModuleSpec:
    return FModuleSpec(EXT, d)


def Fock() -> FModuleSpec:
    return FModuleSpec(FOCK)


def SymDual(d: int) -> FModuleSpec:
    return FModuleSpec(SYM_DUAL, d)


def ExtDual(d: int) -> FModuleSpec:
    return FModuleSpec(EXT_DUAL, d)


def spec_to_json(spec: FModuleSpec) -> dict:
    out = {"kind": spec.kind}
    if spec.d is not None:
        out["d"] = spec.d
    return out


def spec_from_json(obj) -> FModuleSpec:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ModuleError("module document must be an object with a kind")
    d = obj.get("d")
    return FModuleSpec(obj["kind"], int(d) if d is not None else None)


def _all_shapes(profile: WeightProfile):
    for spec in profile.body:
        yield spec.shape
    for tail in (profile.left_tail, profile.right_tail):
        if tail is not None:
            for shape in tail.shapes:
                yield shape


def _total_size_at_least(profile: WeightProfile, d: int) -> bool:
    total = 0
    if profile.left_tail is not None or profile.right_tail is not None:
        return True  # infinitely many nonempty classes
    for spec in profile.body:
        t = spec.shape.total()
        if not is_finite(t):
            return True
        total += t
    return total >= d


def _a_total_infinite(profile: WeightProfile) -> bool:
    for tail in (profile.left_tail, profile.right_tail):
        if tail is not None and any(
            isinstance(s, Split) and (not is_finite(s.a_size) or s.a_size > 0)
            for s in tail.shapes
        ):
            return True
    return any(
        isinstance(s, Split) and not is_finite(s.a_size)
        for s in _all_shapes(profile)
    )


def _b_total_infinite(profile: WeightProfile) -> bool:
    for tail in (profile.left_tail, profile.right_tail):
        if tail is not None and any(
            isinstance(s, Split) and (not is_finite(s.b_size) or s.b_size > 0)
            for s in tail.shapes
        ):
            return True
    return any(
        isinstance(s, Split) and not is_finite(s.b_size)
        for s in _all_shapes(profile)
    )


def validate_module(profile: WeightProfile, spec: FModuleSpec) -> None:
    """Check that the module makes sense over the profile's shapes."""
    if spec.kind == FOCK:
        if not all(isinstance(s, Split) for s in _all_shapes(profile)):
            raise ShapeMismatch("fock modules need all-split shapes")
        if not _a_total_infinite(profile):
            raise ANotInfinite("the wedge set must be infinite")
        if not _b_total_infinite(profile):
            raise BNotInfinite("the complement of the wedge set must be infinite")
        return
    if not all(isinstance(s, Plain) for s in _all_shapes(profile)):
        raise ShapeMismatch(f"{spec.kind} modules need all-plain shapes")
    if not _total_size_at_least(profile, spec.d):
        raise TooSmallForD(f"index set too small for degree {spec.d}")


# --- highest weight status ----------------------------------------------------


def _tail_cycle_has_a(tail: Optional[TailSpec]) -> bool:
    return tail is not None and any(
        not is_finite(s.a_size) or s.a_size > 0 for s in tail.shapes
    )


def _tail_cycle_has_b(tail: Optional[TailSpec]) -> bool:
    return tail is not None and any(
        not is_finite(s.b_size) or s.b_size > 0 for s in tail.shapes
    )


def _last_a_class(profile: WeightProfile) -> Optional[ClassKey]:
    """Last class with a nonempty A-part, assuming the right tail has none."""
    for i in range(profile.n_body - 1, -1, -1):
        shape = profile.body[i].shape
        if not is_finite(shape.a_size) or shape.a_size > 0:
            return key_at_position(profile, i)
    tail = profile.left_tail
    if tail is not None:
        for n in range(1, len(tail.shapes) + 1):
            s = tail.shape_at(n)
            if not is_finite(s.a_size) or s.a_size > 0:
                return ClassKey(-1, n)
    return None


def is_b_highest_weight(profile: WeightProfile, spec: FModuleSpec) -> bool:
    """Whether F has a highest weight for the profile's Borel subalgebra.

    Symmetric and exterior powers need the index set to have a minimum, so no
    left tail.  A Fock module needs only finitely many B-elements to precede
    some A-element, evaluated symbolically over body and tails.
    """
    validate_module(profile, spec)
    if spec.base_kind in (SYM, EXT):
        return profile.left_tail is None
    # fock
    if _tail_cycle_has_a(profile.right_tail):
        return False  # a-parts arbitrarily far right: every b counts
    last_a = _last_a_class(profile)
    assert last_a is not None  # the wedge set is infinite
    if profile.left_tail is not None and _tail_cycle_has_b(profile.left_tail):
        # infinitely many b-bearing classes precede last_a (or deeper periods
        # of the tail precede it when last_a lies in the tail itself)
        return False
    from .profiles import class_position

    # remaining candidates strictly before last_a are body classes; left-tail
    # classes carry no B-elements here and the right tail lies after last_a
    limit = class_position(profile, last_a)
    for pos in range(0, max(0, limit)):
        shape = class_shape(profile, key_at_position(profile, pos))
        if not is_finite(shape.b_size):
            return False
    return True


def highest_weight_element(profile: WeightProfile, spec: FModuleSpec) -> PieriElement:
    """The element labelling F's highest weight relative to the profile."""
    if not is_b_highest_weight(profile, spec):
        raise NotHighestWeight("F has no highest weight for this order")
    if spec.base_kind == SYM:
        first = key_at_position(profile, 0 if profile.body else profile.n_body)
        return sym_element({first: spec.d})
    if spec.base_kind == EXT:
        counts: dict[ClassKey, int] = {}
        remaining = spec.d
        pos = 0
        while remaining > 0:
            key = key_at_position(profile, pos)
            size = class_shape(profile, key).size
            take = remaining if not is_finite(size) else min(size, remaining)
            if take > 0:
                counts[key] = take
            remaining -= take
            pos += 1
        return ext_element(counts)
    return _fock_highest_weight(profile)


def _b_positions_ascending(profile: WeightProfile):
    """B-part elements in profile order; valid under the highest weight
    hypothesis, where the left tail carries no B-elements."""
    pos = 0
    while True:
        if pos >= profile.n_body and profile.right_tail is None:
            return
        key = key_at_position(profile, pos)
        shape = class_shape(profile, key)
        b = shape.b_size
        off = 1
        while (not is_finite(b)) or off <= b:
            yield Position(key, PART_B, off)
            off += 1
        pos += 1


def _a_positions_descending(profile: WeightProfile, start_pos: int):
    """A-part elements from the class at start_pos moving leftward, each
    class's A-part from its maximum outward."""
    pos = start_pos
    while True:
        if pos < 0 and profile.left_tail is None:
            return
        key = key_at_position(profile, pos)
        shape = class_shape(profile, key)
        a = shape.a_size
        off = 1
        while (not is_finite(a)) or off <= a:
            yield Position(key, PART_A, off)
            off += 1
        pos -= 1


def _fock_highest_weight(profile: WeightProfile) -> PieriElement:
    from .profiles import class_position

    last_a = _last_a_class(profile)
    assert last_a is not None
    b_gen = _b_positions_ascending(profile)
    a_gen = _a_positions_descending(profile, class_position(profile, last_a))
    removed: dict[ClassKey, int] = {}
    added: dict[ClassKey, int] = {}
    for k in range(100_000):
        b = next(b_gen, None)
        a = next(a_gen, None)
        if b is None or a is None:
            break
        if position_sort_key(profile, b) < position_sort_key(profile, a):
            removed[a.key] = removed.get(a.key, 0) + 1
            added[b.key] = added.get(b.key, 0) + 1
        else:
            break
    else:  # pragma: no cover
        raise GlpieriError("swap search did not terminate")
    swaps: dict[ClassKey, tuple[int, int]] = {}
    for key, r in removed.items():
        swaps[key] = (r, 0)
    for key, s in added.items():
        old = swaps.get(key, (0, 0))
        assert old[0] == 0, "a class cannot both lose A- and gain B-elements"
        swaps[key] = (0, s)
    return fock_element(swaps)


# --- dual reduction -----------------------------------------------------------


def _negate_tail(tail: Optional[TailSpec]) -> Optional[TailSpec]:
    if tail is None:
        return None
    return TailSpec(-tail.start_value, -tail.step_per_class, tail.shapes)


def dual_reduction(
    profile: WeightProfile, dual_spec: FModuleSpec
) -> tuple[WeightProfile, FModuleSpec]:
    """Replace the dual module analysis by the primal one over the negated
    profile; constituent weights of the answer are negated on output."""
    if not dual_spec.is_dual:
        raise NotDualizable(f"{dual_spec.kind} is not a dual module kind")
    _validate_structure(profile)
    values = []
    if profile.left_tail is not None:
        values.append(profile.left_tail.start_value)
        if profile.left_tail.step_per_class > -1:
            raise NotDualizable("left tail of a dual profile must step down outward")
    values.extend(spec.value for spec in profile.body)
    if profile.right_tail is not None:
        values.append(profile.right_tail.start_value)
        if profile.right_tail.step_per_class < 1:
            raise NotDualizable("right tail of a dual profile must step up outward")
    for a, b in zip(values, values[1:]):
        if a >= b:
            raise NotDualizable(
                f"dual profiles need strictly increasing values (saw {a} then {b})"
            )
    negated = WeightProfile(
        body=tuple(ClassSpec(-s.value, s.shape) for s in profile.body),
        left_tail=_negate_tail(profile.left_tail),
        right_tail=_negate_tail(profile.right_tail),
    )
    return validate_profile(negated), FModuleSpec(dual_spec.base_kind, dual_spec.d)
