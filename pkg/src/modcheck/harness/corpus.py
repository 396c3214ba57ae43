"""Deterministic module corpora for exhaustive verification."""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import asdict, dataclass, field

from ..endo import endomorphism_count
from ..errors import ModcheckError
from ..module import FinModule
from ..products import DECOMPOSABLE, SHARED, product_module
from ..ring import FiniteRing


@dataclass(frozen=True)
class CorpusConfig:
    ring_moduli: tuple = tuple(range(2, 13))
    max_module_order: int = 64
    max_endo_family: int = 65536
    include_products: bool = True
    include_decomposable: bool = True
    seed: int = 0

    def __post_init__(self):
        moduli = tuple(sorted({int(n) for n in self.ring_moduli}))
        object.__setattr__(self, "ring_moduli", moduli)
        if not moduli:
            raise ModcheckError("corpus config needs at least one ring modulus")
        if any(n < 2 for n in moduli):
            raise ModcheckError("ring moduli must be >= 2")
        if self.max_module_order < 1 or self.max_endo_family < 1:
            raise ModcheckError("corpus bounds must be positive")

    def to_dict(self):
        d = asdict(self)
        d["ring_moduli"] = list(self.ring_moduli)
        return d

    @classmethod
    def from_mapping(cls, data):
        """Build from ``key=value`` style string data (config files) or typed values."""
        kwargs = {}
        for key, value in data.items():
            key = key.strip().replace("-", "_")
            if key not in cls.__dataclass_fields__:
                raise ModcheckError(f"unknown config key {key!r}")
            if key == "ring_moduli":
                if isinstance(value, str):
                    value = tuple(int(v) for v in value.replace(" ", "").split(",") if v)
                kwargs[key] = tuple(value)
            elif key in ("include_products", "include_decomposable"):
                kwargs[key] = value if isinstance(value, bool) else str(value).strip().lower() in ("1", "true", "yes", "on")
            else:
                kwargs[key] = int(value)
        return cls(**kwargs)


def read_config_file(path):
    """Raw ``key = value`` pairs of a config file (``#`` starts a comment)."""
    data = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ModcheckError(f"{path}:{lineno}: expected key = value")
            key, value = line.split("=", 1)
            data[key.strip().replace("-", "_")] = value.strip()
    return data


def load_config_file(path):
    return CorpusConfig.from_mapping(read_config_file(path))


def apply_env(cfg, environ=None):
    """``MODCHECK_MAX_ORDER`` overrides ``max_module_order``."""
    environ = os.environ if environ is None else environ
    raw = environ.get("MODCHECK_MAX_ORDER")
    if raw is None or raw.strip() == "":
        return cfg
    try:
        value = int(raw)
    except ValueError:
        raise ModcheckError(f"MODCHECK_MAX_ORDER must be an integer, got {raw!r}") from None
    return CorpusConfig(**{**cfg.__dict__, "max_module_order": value})


def _factor_tuples(n, max_order):
    """Nondecreasing tuples of divisors ``d ≥ 2`` of ``n`` with product ``≤ max_order``."""
    divisors = [d for d in range(2, n + 1) if n % d == 0]
    out = []

    def grow(prefix, start, order):
        if prefix:
            out.append(tuple(prefix))
        for i in range(start, len(divisors)):
            d = divisors[i]
            if order * d > max_order:
                break
            grow(prefix + [d], i, order * d)

    grow([], 0, 1)
    return sorted(out, key=lambda t: (math.prod(t), len(t), t))


@dataclass
class Corpus:
    modules: list = field(default_factory=list)
    excluded: list = field(default_factory=list)
    shared_pairs: list = field(default_factory=list)
    decomposable_pairs: list = field(default_factory=list)


def base_modules(cfg):
    """Modules over single rings ``Z_n`` and those excluded by the endomorphism bound."""
    kept, excluded = [], []
    for n in cfg.ring_moduli:
        ring = FiniteRing((n,))
        for orders in _factor_tuples(n, cfg.max_module_order):
            M = FinModule(ring, orders)
            (kept if endomorphism_count(M) <= cfg.max_endo_family else excluded).append(M)
    return kept, excluded


def generate_corpus(cfg):
    """Every module ``Z_{d_1} x ... x Z_{d_k}`` over ``Z_n`` (``d_i | n``, ``d_i ≥ 2``) within the bounds.

    With products enabled, ordered pairs over a shared ring whose combined
    order and restricted family fit the bounds are listed.  With decomposable
    products enabled, ordered pairs of faithful modules ``M_1`` over ``Z_{n_1}``
    and ``M_2`` over ``Z_{n_2}`` are listed as modules over ``Z_{n_1} x Z_{n_2}``.
    """
    modules, excluded = base_modules(cfg)
    corpus = Corpus(list(modules), list(excluded))
    if cfg.include_products:
        for M1, M2 in itertools.product(modules, repeat=2):
            if M1.ring != M2.ring or M1.order * M2.order > cfg.max_module_order:
                continue
            if endomorphism_count(M1) * endomorphism_count(M2) > cfg.max_endo_family:
                continue
            corpus.shared_pairs.append(product_module(M1, M2, SHARED))
    if cfg.include_decomposable:
        faithful = [M for M in modules if max(M.orders) == M.ring.moduli[0]]
        for M1, M2 in itertools.product(faithful, repeat=2):
            if M1.order * M2.order > cfg.max_module_order:
                continue
            P = product_module(M1, M2, DECOMPOSABLE)
            if endomorphism_count(P.combined) > cfg.max_endo_family:
                continue
            corpus.decomposable_pairs.append(P)
    return corpus


def corpus_summary(corpus):
    """Sizes of each corpus part and the modules dropped by the endomorphism bound."""
    return {
        "modules": len(corpus.modules),
        "shared_pairs": len(corpus.shared_pairs),
        "decomposable_pairs": len(corpus.decomposable_pairs),
        "excluded_modules": [str(M) for M in corpus.excluded],
    }
