# ==============================================================================
# documents.py — Structured documents exchanged with files and the CLI
# ==============================================================================
# Purpose: Define the pydantic models for the algebra file, the edge-list export
#          and the complex export, with conversion to and from in-memory objects.
# Sections: Imports, Helpers, Algebra Document, Edge List, Complex
# ==============================================================================

from __future__ import annotations

from pathlib import Path
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..core.algebra import FiniteAlgebra, Operation
from ..core.exceptions import InputError

# ==============================================================================
# Helpers
# ==============================================================================

def _location(loc: tuple) -> str:
    return ".".join(str(part) for part in loc) or "<root>"


def parse_document(model: type[BaseModel], text: str, source: str = "<string>") -> BaseModel:
    """Validate JSON text against `model`, turning pydantic errors into `InputError`."""
    try:
        return model.model_validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        raise InputError(f"{source}: {first['msg']}", path=_location(first["loc"])) from None


# ==============================================================================
# Algebra Document
# ==============================================================================

class OperationDocument(BaseModel):
    """One operation: name, arity and the flat row-major table."""
    model_config = ConfigDict(extra="forbid")

    name: str = Field(..., description="Operation name, unique within the algebra.")
    arity: int = Field(..., ge=0, description="Number of arguments.")
    table: List[int] = Field(..., description="Row-major table of n^arity element indices.")


class AlgebraDocument(BaseModel):
    """The algebra file: carrier size, optional element names, operation tables."""
    model_config = ConfigDict(extra="forbid")

    name: str = Field(..., description="Label of the algebra.")
    size: int = Field(..., ge=1, description="Number of elements n.")
    elements: Optional[List[str]] = Field(None, description="Element names, default '0'..'n-1'.")
    operations: List[OperationDocument] = Field(default_factory=list)

    def check(self) -> None:
        """
        Check the cross-field constraints pydantic cannot see.

        Raises:
            InputError: Naming the offending path, e.g. ``operations.1.table.3``.
        """
        n = self.size
        if self.elements is not None:
            if len(self.elements) != n:
                raise InputError(f"expected {n} element names, got {len(self.elements)}", path="elements")
            if len(set(self.elements)) != n:
                raise InputError("element names must be distinct", path="elements")
        names: set[str] = set()
        for i, op in enumerate(self.operations):
            if op.name in names:
                raise InputError(f"duplicate operation name {op.name!r}", path=f"operations.{i}.name")
            names.add(op.name)
            expected = n ** op.arity
            if len(op.table) != expected:
                raise InputError(
                    f"table of {op.name!r} has {len(op.table)} entries, expected {expected}",
                    path=f"operations.{i}.table",
                )
            for j, value in enumerate(op.table):
                if not 0 <= value < n:
                    raise InputError(f"entry {value} outside [0, {n})", path=f"operations.{i}.table.{j}")

    def to_algebra(self) -> FiniteAlgebra:
        """Convert into a `FiniteAlgebra` after checking the document."""
        self.check()
        operations = tuple(
            Operation(op.name, op.arity, np.array(op.table, dtype=np.intp).reshape((self.size,) * op.arity))
            for op in self.operations
        )
        return FiniteAlgebra(
            name=self.name,
            size=self.size,
            operations=operations,
            element_names=tuple(self.elements or ()),
        )

    @classmethod
    def from_algebra(cls, algebra: FiniteAlgebra) -> AlgebraDocument:
        return cls(
            name=algebra.name,
            size=algebra.size,
            elements=list(algebra.element_names),
            operations=[
                OperationDocument(name=op.name, arity=op.arity, table=op.flat_table())
                for op in algebra.operations
            ],
        )


def load_algebra(path: str | Path) -> FiniteAlgebra:
    """
    Read an algebra document from disk.

    Raises:
        InputError: If the file is missing or malformed.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read algebra file {str(path)!r}: {e.strerror}") from None
    document = parse_document(AlgebraDocument, text, source=str(path))
    return document.to_algebra()


def dump_algebra(algebra: FiniteAlgebra, path: str | Path | None = None) -> str:
    """Serialize `algebra` as an algebra document; also write it when `path` is given."""
    text = AlgebraDocument.from_algebra(algebra).model_dump_json(indent=2)
    if path is not None:
        Path(path).write_text(text + "\n", encoding="utf-8")
    return text


# ==============================================================================
# Edge List
# ==============================================================================

class EdgeListDocument(BaseModel):
    """Structured edge list; undirected edges are stored with i < j."""
    model_config = ConfigDict(extra="forbid")

    vertices: List[str] = Field(..., description="Vertex labels in index order.")
    edges: List[List[int]] = Field(default_factory=list, description="Sorted index pairs.")
    directed: bool = Field(False, description="True for digraph arc lists.")

    def check(self) -> None:
        n = len(self.vertices)
        for k, pair in enumerate(self.edges):
            if len(pair) != 2 or not all(0 <= v < n for v in pair):
                raise InputError(f"bad edge {pair}", path=f"edges.{k}")
            if pair[0] == pair[1]:
                raise InputError("loops are not stored", path=f"edges.{k}")


# ==============================================================================
# Complex
# ==============================================================================

class ComplexDocument(BaseModel):
    """Simplicial complex export: ground labels and facets as index lists."""
    model_config = ConfigDict(extra="forbid")

    ground: List[str] = Field(..., description="Labels of the ground set A minus E(A).")
    facets: List[List[int]] = Field(default_factory=list, description="Facets as sorted indices into `ground`.")


# ==============================================================================
# Public exports
# ==============================================================================

__all__ = [
    "parse_document",
    "OperationDocument",
    "AlgebraDocument",
    "load_algebra",
    "dump_algebra",
    "EdgeListDocument",
    "ComplexDocument",
]
