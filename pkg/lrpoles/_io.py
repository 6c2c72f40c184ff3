"""JSON file models. Partitions are arrays of column heights; tableau
grids list picture rows top to bottom with 0 for an empty box."""
from pathlib import Path
from typing import Optional

import galois
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ._combinatorics import PoleDecomposition, Tableau, validate_grid, validate_lr
from ._engine import EmbeddingInstance, ModuleSpace


class TableauFile(BaseModel):
    chain: Optional[list[list[int]]] = None
    grid: Optional[list[list[int]]] = None

    @model_validator(mode="after")
    def _one_form(self):
        if (self.chain is None) == (self.grid is None):
            raise ValueError("give exactly one of 'chain' and 'grid'")
        return self

    def tableau(self) -> Tableau:
        """Certified LR; raises LRViolation with a witness box."""
        if self.chain is not None:
            return validate_lr(self.chain)
        return validate_grid(self.grid)

    @classmethod
    def from_tableau(cls, t: Tableau) -> "TableauFile":
        return cls(chain=[list(level) for level in t.chain])


class DecompositionFile(BaseModel):
    poles: list[list[int]] = []
    empty: list[int] = []

    def decomposition(self) -> PoleDecomposition:
        return PoleDecomposition(tuple(tuple(h) for h in self.poles), tuple(self.empty))


class EmbeddingFile(BaseModel):
    p: int
    beta: list[int]
    generators: list[list[int]] = []

    @field_validator("p")
    @classmethod
    def _prime(cls, p):
        if not galois.is_prime(p):
            raise ValueError(f"{p} is not a prime")
        return p

    def instance(self) -> EmbeddingInstance:
        return EmbeddingInstance(ModuleSpace(self.p, tuple(self.beta)),
                                 tuple(tuple(g) for g in self.generators))


class EdgeRecord(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    source: int = Field(alias="from")
    target: int = Field(alias="to")
    kind: str
    certified: bool = False
    certificate: Optional[dict] = None


class PosetFile(BaseModel):
    nodes: list[TableauFile]
    edges: list[EdgeRecord] = []

    @classmethod
    def from_poset(cls, poset) -> "PosetFile":
        data = poset.to_dict()
        return cls(nodes=[TableauFile.from_tableau(t) for t in poset.nodes],
                   edges=[EdgeRecord.model_validate(e) for e in data["edges"]])

    def dumps(self) -> str:
        return self.model_dump_json(by_alias=True, exclude_none=True, indent=2) + "\n"


def load(model: type[BaseModel], path):
    return model.model_validate_json(Path(path).read_text())
