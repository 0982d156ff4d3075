"""
Data models for jacklab.
"""

from .schemas import (
    VerificationReport,
    SuiteInfo,
    JackRow,
    CharacterRow,
    StructureConstantRow,
    CoefficientRow,
    EmbeddingRow,
    EtaRow,
    HandshakeRow,
)

__all__ = [
    "VerificationReport",
    "SuiteInfo",
    "JackRow",
    "CharacterRow",
    "StructureConstantRow",
    "CoefficientRow",
    "EmbeddingRow",
    "EtaRow",
    "HandshakeRow",
]
