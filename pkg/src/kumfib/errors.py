"""Exception hierarchy.

Everything raised on purpose by kumfib derives from KumfibError, so the CLI
can map failures to machine-readable error JSON (exit 1) and inconclusive
outcomes to exit 2 without catching bare Exception.
"""


class KumfibError(Exception):
    """Base class for all kumfib errors."""


class InputError(KumfibError):
    """Malformed or out-of-contract input (bad rational string, zero
    polynomial where a nonzero one is required, invariant violations)."""


class PoleError(KumfibError):
    """A parametrization was evaluated at a pole.

    Carries the vanishing denominator so callers can route around the
    finitely many bad parameter values.
    """

    def __init__(self, denominator: str, u) -> None:
        super().__init__(f"parametrization pole at u = {u}: {denominator} = 0")
        self.denominator = denominator
        self.u = u


class NotOnCurveError(KumfibError):
    """A point failed the exact on-curve check."""


class SingularCurveError(KumfibError):
    """An operation requiring smoothness met a singular curve."""


class DegenerateFiberError(KumfibError):
    """Fiber at a root of f(t), or a singular fiber."""


class FactorizationBoundError(KumfibError):
    """A composite cofactor exceeded the configured bit bound."""

    def __init__(self, cofactor: int, bit_bound: int) -> None:
        super().__init__(
            f"composite cofactor with {cofactor.bit_length()} bits exceeds "
            f"the {bit_bound}-bit factorization bound"
        )
        self.cofactor = cofactor
        self.bit_bound = bit_bound


class SeedTorsionError(KumfibError):
    """The caller-provided seed point is torsion in its fiber."""


class Inconclusive(KumfibError):
    """A capped search ended without a certificate.

    Never a refutation: density failures at cap are reported, not decided.
    The CLI maps this to exit code 2.
    """

    def __init__(self, message: str, detail: dict | None = None) -> None:
        super().__init__(message)
        self.detail = detail or {}
