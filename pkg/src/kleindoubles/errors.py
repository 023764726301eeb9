from .signatures import SignatureError, SignatureSyntaxError


class HypothesisError(ValueError):
    """Input outside the domain where a construction is defined."""


class HomomorphismError(ValueError):
    """Bad generator images, unknown generators, or failed validation."""


class InconsistentComplex(RuntimeError):
    """A glued complex violates an invariant; indicates a construction bug."""


__all__ = [
    "SignatureError",
    "SignatureSyntaxError",
    "HypothesisError",
    "HomomorphismError",
    "InconsistentComplex",
]
