"""
Pydantic models for jacklab reports and table rows.
"""

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from jacklab.algebra.partitions import Partition
from jacklab.algebra.scalars import (
    LaurentA,
    BetaPolynomial,
    laurent_to_json,
    poly_to_json,
)
from jacklab.combinatorics.matchings import Matching


Status = Literal["verified", "failed", "reported-only"]


# ============================================================================
# Serialization helpers
# ============================================================================

def partition_json(p: Partition) -> List[int]:
    return p.to_list()


def partition_text(p: Partition) -> str:
    return ",".join(str(part) for part in p)


def matching_json(m: Matching) -> List[List[str]]:
    return m.to_labels()


def poly_json(p: BetaPolynomial) -> List[str]:
    """Ascending coefficients as exact strings, ``[]`` for zero."""
    return poly_to_json(p)


def laurent_json(f: LaurentA) -> Dict[str, str]:
    return laurent_to_json(f)


# ============================================================================
# Verification reports
# ============================================================================

class VerificationReport(BaseModel):
    """Outcome of one statement checked over one parameter range."""
    suite: str
    statement: str
    parameters: Dict[str, Any] = {}
    status: Status
    counterexample: Optional[Dict[str, Any]] = None
    detail: Optional[str] = None
    wall_time: float = Field(default=0.0, ge=0.0)

    model_config = ConfigDict(from_attributes=True)

    @model_validator(mode="after")
    def _failed_needs_counterexample(self) -> "VerificationReport":
        if self.status == "failed" and self.counterexample is None:
            raise ValueError("failed reports must carry a counterexample")
        return self

    @property
    def blocking_failure(self) -> bool:
        return self.status == "failed"

    def sort_key(self) -> tuple:
        params = sorted(
            (k, (0, v, "") if isinstance(v, int) else (1, 0, str(v)))
            for k, v in self.parameters.items()
        )
        return (self.statement, params)

    def to_json_line(self, timing: bool = False) -> str:
        """One JSON line; wall time is only included on request so lines stay reproducible."""
        exclude = None if timing else {"wall_time"}
        return self.model_dump_json(exclude=exclude)


class SuiteInfo(BaseModel):
    """Catalogue entry printed by ``jack-lab verify --list``."""
    name: str
    description: str
    default_n: int
    statements: List[str] = []

    model_config = ConfigDict(from_attributes=True)


# ============================================================================
# Table rows
# ============================================================================

class JackRow(BaseModel):
    """One power-sum coefficient θ_μ(λ) of J_λ."""
    lam: str
    mu: str
    theta: str

    model_config = ConfigDict(from_attributes=True)


class CharacterRow(BaseModel):
    """Ch_π(λ) with its A-top coefficient."""
    pi: str
    lam: str
    value: Dict[str, str]
    a_top: int

    model_config = ConfigDict(from_attributes=True)


class StructureConstantRow(BaseModel):
    """g^μ_{π,σ} as ascending δ-coefficients."""
    pi: str
    sigma: str
    mu: str
    coefficients: List[str]
    degree_bound: int

    model_config = ConfigDict(from_attributes=True)


class CoefficientRow(BaseModel):
    """c or h at one triple, as β-coefficients or as a rational function of α."""
    pi: str
    sigma: str
    lam: str
    beta: Optional[List[str]] = None
    alpha: Optional[str] = None

    model_config = ConfigDict(from_attributes=True)


class EmbeddingRow(BaseModel):
    """Embedding counts of G_π into one diagram."""
    pi: str
    lam: str
    embeddings: int
    negative_conjugate: int
    hat_p: int

    model_config = ConfigDict(from_attributes=True)


class EtaRow(BaseModel):
    """stat_η of one matching in a G^{λ;λ} class."""
    matching: str
    bipartite: bool
    orientable: bool
    unhandled: bool
    eta: int
    trace: str

    model_config = ConfigDict(from_attributes=True)


class HandshakeRow(BaseModel):
    """Both sides of the hands-shaking count at one triple."""
    pi: str
    sigma: str
    mu: str
    count: int
    constant: int
    z_ratio: str
    oriented_lists: int
    holds: bool

    model_config = ConfigDict(from_attributes=True)
