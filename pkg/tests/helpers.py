"""Shared test utilities."""

from propnet import Oracle


def normalize(text: str) -> str:
    """Case/punctuation-insensitive comparison form."""
    cleaned = "".join(c for c in text.lower() if c.isalnum() or c.isspace() or c == "_")
    return " ".join(cleaned.split())


class DictOracle(Oracle):
    """Backend with explicit scores; unknown pairs fall back to a default."""

    def __init__(self, scores: dict[tuple[str, str], float] | None = None, default: float = 0.0):
        self.scores = {}
        for (a, b), v in (scores or {}).items():
            key = tuple(sorted((a.lower(), b.lower())))
            self.scores[key] = v
        self.default = default
        self.calls: list[tuple[str, str, bool]] = []

    def _score(self, w1, w2, verb_context):
        self.calls.append((w1, w2, verb_context))
        return self.scores.get((w1, w2), self.default)
