"""Model lookup by id: james, piecewise, logit, rational, cot, probit, power:<n>."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .core import JamesianModel, ParamError
from .generators import Generator, builtin_generator, jamesian_from_generator
from .james import JAMES
from .piecewise import PIECEWISE

MODEL_IDS = ("james", "piecewise", "logit", "rational", "cot", "probit", "power:<n>")
GENERATOR_MODELS = ("logit", "rational", "cot", "probit", "power:1.5", "power:2")
ALL_MODELS = ("james", "piecewise") + GENERATOR_MODELS


@dataclass(frozen=True)
class ModelSpec:
    id: str
    n: Optional[float] = None

    @classmethod
    def parse(cls, text: str) -> "ModelSpec":
        text = text.strip()
        if text.startswith("power"):
            head, sep, arg = text.partition(":")
            if head != "power" or not sep:
                raise ParamError(f"power model needs an exponent, e.g. power:2 (got {text!r})")
            try:
                n = float(arg)
            except ValueError:
                raise ParamError(f"bad exponent in {text!r}") from None
            if not n >= 1.0:
                raise ParamError(f"power exponent must be >= 1, got {n!r}")
            return cls("power", n)
        if text in ("james", "piecewise", "logit", "rational", "cot", "probit"):
            return cls(text)
        raise ParamError(f"unknown model {text!r}; expected one of {', '.join(MODEL_IDS)}")

    @property
    def key(self) -> str:
        return f"power:{self.n:g}" if self.id == "power" else self.id


def generator_for(spec: ModelSpec) -> Optional[Generator]:
    """The generator behind a model; the James function is the logit model."""
    if spec.id == "piecewise":
        return None
    if spec.id == "james":
        return builtin_generator("logit")
    return builtin_generator(spec.id, spec.n) if spec.id == "power" else builtin_generator(spec.id)


@lru_cache(maxsize=None)
def _model(key: str) -> JamesianModel:
    spec = ModelSpec.parse(key)
    if spec.id == "james":
        return JAMES
    if spec.id == "piecewise":
        return PIECEWISE
    return jamesian_from_generator(generator_for(spec))


def get_model(text: str) -> JamesianModel:
    return _model(ModelSpec.parse(text).key)
