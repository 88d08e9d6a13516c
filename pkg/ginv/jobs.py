from enum import Enum
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Command(str, Enum):
    VALIDATE = "validate"
    INVARIANTS = "invariants"
    HOMOLOGY = "homology"
    K_GROUPS = "k-groups"
    HK_CHECK = "hk-check"
    CLASSIFY = "classify"
    MORITA = "morita"
    ABELIANIZATION = "abelianization"
    STRONG_AH = "strong-ah"
    RELATIONS_CHECK = "relations-check"
    CHARACTER_SEARCH = "character-search"
    BAKER_CHECK = "baker-check"


PAIR_COMMANDS = {Command.CLASSIFY, Command.MORITA}
TABLE_COMMANDS = {Command.RELATIONS_CHECK, Command.CHARACTER_SEARCH, Command.BAKER_CHECK}


class JobSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    command: Command
    inputs: list[list[list[list[int]]]] = []
    arity: tuple[int, ...] | None = None
    target_order: int | None = None
    primary: bool = False
    output_format: Literal["text", "json"] = "text"
    aut_bound: int | None = Field(default=None, ge=1)
    tuple_bound: int | None = Field(default=None, ge=1)
    index_bound: int | None = Field(default=None, ge=2)

    @model_validator(mode="after")
    def _check_inputs(self):
        if self.command in TABLE_COMMANDS:
            if self.arity is None or self.inputs:
                raise ValueError(f"{self.command.value} takes an arity list and no factor lists")
            if not self.arity or any(k < 2 for k in self.arity):
                raise ValueError(f"Arities must be at least 2, got {self.arity}")
            if self.command == Command.CHARACTER_SEARCH and (self.target_order or 0) < 2:
                raise ValueError("character-search needs a target order of at least 2")
        else:
            expected = 2 if self.command in PAIR_COMMANDS else 1
            if len(self.inputs) != expected:
                raise ValueError(f"{self.command.value} takes exactly {expected} factor list(s)")
        return self


class Outcome(BaseModel):
    """What a command handler produced: a JSON payload, its text rendering and an optional verdict."""

    payload: dict[str, Any]
    text: str
    verdict: bool | None = None


class RunResult(BaseModel):
    output: str
    exit_code: int
    diagnostics: str = ""
