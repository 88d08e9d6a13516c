import json
import os

from pydantic import BaseModel, ConfigDict, ValidationError as PydanticValidationError

from ginv.errors import ParseError
from ginv.sft import SftMatrix, validate


class FactorDocument(BaseModel):
    """Input document: {"factors": [matrix, ...]} with matrices as row-major arrays."""

    model_config = ConfigDict(extra="forbid")

    factors: list[list[list[int]]]


def load_document(source: str) -> FactorDocument:
    """Read a factor document from a file path or from inline JSON text."""
    if os.path.exists(source):
        try:
            with open(source, encoding="utf-8") as f:
                text = f.read()
        except OSError as e:
            raise ParseError(f"Cannot read {source}: {e}") from e
    else:
        text = source
    try:
        return FactorDocument.model_validate_json(text)
    except PydanticValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise ParseError(f"Invalid input document at {location or 'top level'}: {first['msg']}") from e


def validate_factors(factors: list[list[list[int]]]) -> list[SftMatrix]:
    if not factors:
        raise ParseError("The factor list is empty")
    return [validate(rows, factor=index) for index, rows in enumerate(factors)]


def parse_input(source: str) -> list[SftMatrix]:
    return validate_factors(load_document(source).factors)


def parse_arity(text: str) -> tuple[int, ...]:
    """'3,5,5' -> (3, 5, 5)"""
    try:
        arity = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as e:
        raise ParseError(f"Invalid arity list {text!r}") from e
    if not arity or any(k < 2 for k in arity):
        raise ParseError(f"Arities must be integers >= 2, got {text!r}")
    return arity


def to_json(payload: BaseModel | dict) -> str:
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json")
    return json.dumps(payload, indent=2, ensure_ascii=False)
