"""Acts over finite monoids: decomposition, isomorphism and cancellation."""

import json

try:
    from . import _actkit as _core
except ImportError:  # in-tree build: extension sits next to the package
    import _actkit as _core

Monoid = _core.Monoid
Act = _core.Act
ActkitError = _core.ActkitError
enumerate_acts = _core.enumerate_acts
__version__ = _core.__version__


def _dumps(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def decide_cancellable(symbolic):
    """Verdict dict for a symbolic act given as a dict or JSON text."""
    return json.loads(_core.decide_cancellable_json(_dumps(symbolic)))


def decide_internally_cancellable(symbolic):
    return json.loads(_core.decide_internally_cancellable_json(_dumps(symbolic)))


def sym_coproduct(x, y):
    return json.loads(_core.sym_coproduct_json(_dumps(x), _dumps(y)))


def sym_iso(x, y):
    return _core.sym_iso_json(_dumps(x), _dumps(y))


def symbolize(act):
    return json.loads(act.symbolize_json())


def canonical_form(act):
    return json.loads(act.canonical_json())


def decomposition(act):
    """{"components": [...], "signature": [...]} as emitted by the CLI."""
    return json.loads(act.decomposition_json())


def verify(monoid, suite, max_size):
    return json.loads(_core.verify_json(monoid, suite, max_size))


def verify_symbolic(seed=0, trials=1000):
    return json.loads(_core.verify_symbolic_json(seed, trials))


__all__ = [
    "Act",
    "ActkitError",
    "Monoid",
    "canonical_form",
    "decide_cancellable",
    "decide_internally_cancellable",
    "decomposition",
    "enumerate_acts",
    "sym_coproduct",
    "sym_iso",
    "symbolize",
    "verify",
    "verify_symbolic",
]
