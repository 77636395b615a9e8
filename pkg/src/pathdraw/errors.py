"""Exception types raised by graph construction, parsing, and validation."""

from __future__ import annotations


class PathdrawError(ValueError):
    """Base class for all input-validation errors."""


class SelfLoop(PathdrawError):
    def __init__(self, token: str):
        super().__init__(f"self-loop on vertex {token!r}")
        self.token = token


class CycleDetected(PathdrawError):
    def __init__(self, tokens: list[str]):
        super().__init__("cycle detected: " + " -> ".join(tokens + tokens[:1]))
        self.tokens = tokens


class UnknownVertex(PathdrawError):
    def __init__(self, token: str):
        super().__init__(f"unknown vertex {token!r}")
        self.token = token


class VertexMissing(PathdrawError):
    def __init__(self, tokens: list[str]):
        super().__init__("vertices not covered by any path: " + ", ".join(tokens))
        self.tokens = tokens


class VertexRepeated(PathdrawError):
    def __init__(self, token: str):
        super().__init__(f"vertex {token!r} appears in more than one path position")
        self.token = token


class NonEdgeStep(PathdrawError):
    def __init__(self, source: str, target: str):
        super().__init__(f"consecutive path vertices {source!r} -> {target!r} are not joined by an edge")
        self.source = source
        self.target = target


class MalformedLine(PathdrawError):
    def __init__(self, line_number: int, line: str):
        super().__init__(f"malformed line {line_number}: {line!r}")
        self.line_number = line_number
        self.line = line


class InfeasibleDegree(PathdrawError):
    def __init__(self, n: int, m: int):
        super().__init__(f"cannot place {m} edges on {n} vertices (max {n * (n - 1) // 2})")
        self.n = n
        self.m = m
