"""Numerical tolerances shared by all modules."""

from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class Config:
    modes: int = 128             # starting harmonic count for adaptive refits
    mode_cap: int = 16384        # refits needing more harmonics raise ModeOverflow
    tail_tol: float = 1e-12      # accept a refit once its trailing coefficients fall below this
    trim_tol: float = 1e-15      # coefficients below this are dropped after a refit
    grid: int = 1024             # size of the cached evaluation grid
    validation_tol: float = 1e-10
    newton_tol: float = 1e-12
    newton_maxiter: int = 50
    margin_fraction: float = 0.1
    safety: float = 0.9
    slice_cap: int = 2 ** 14
    word_cap: int = 10 ** 5
    support_tol: float = 1e-8

    def replace(self, **changes):
        return replace(self, **changes)

    def to_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def from_dict(cls, data):
        known = {f.name: f.type for f in fields(cls)}
        unknown = set(data) - set(known)
        if unknown:
            raise ValueError("unknown config keys: %s" % ", ".join(sorted(unknown)))
        cfg = cls(**data)
        cfg.validate()
        return cfg

    def validate(self):
        if self.modes < 1 or self.mode_cap < self.modes:
            raise ValueError("need 1 <= modes <= mode_cap")
        if not 0 < self.margin_fraction < 0.5:
            raise ValueError("margin_fraction must lie in (0, 0.5)")
        if not 0 < self.safety <= 1:
            raise ValueError("safety must lie in (0, 1]")
        for name in ("tail_tol", "trim_tol", "validation_tol", "newton_tol", "support_tol"):
            if not getattr(self, name) > 0:
                raise ValueError("%s must be positive" % name)
        if self.grid < 16 or self.newton_maxiter < 1 or self.slice_cap < 1 or self.word_cap < 1:
            raise ValueError("grid, newton_maxiter, slice_cap and word_cap must be positive")


DEFAULT = Config()
