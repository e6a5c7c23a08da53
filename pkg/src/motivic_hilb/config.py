"""Run configuration for the verification suites."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

# test classes for the general-threefold cross-check, as class expressions
THREEFOLD_CLASSES = ("0", "1", "1 + L", "L^3", "1 + L + L^2 + L^3")
REFINED_DELTAS = ("-3/2", "-1", "-1/2", "0", "1/2", "1", "3/2")


@dataclass(frozen=True)
class VerifyConfig:
    """Knobs shared by every suite.

    ``order`` is the t-order for the motivic identities; suites whose
    oracle is an enumeration cap it at their own ceiling.  ``floor`` is in
    u-units (half-powers of L), so ``-80`` means ``L^(-40)``.
    """

    order: int = 8
    floor: int = -80
    threads: int = 1
    seed: int = 20240611
    plethysm_cases: int = 200
    plethysm_max_order: int = 10
    euler_order: int = 12
    refined_order: int = 10
    guess_order_d3: int = 10
    guess_order_d4: int = 8
    feitfine_order: int = 6
    threefold_classes: tuple = field(default=THREEFOLD_CLASSES)
    refined_deltas: tuple = field(default=REFINED_DELTAS)

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")

    def to_json(self):
        return asdict(self)
