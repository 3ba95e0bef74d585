"""Subjective search over entity review corpora."""

__version__ = "0.1.0"
