"""Pydantic request/response models shared by the HTTP service and the CLI."""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, Field


class BuildRequest(BaseModel):
    target: str = Field(description="G2|F4|E6|E7|E8, so(n)|su(n)|sp(n), a Cartan "
                                    "label, or the experiment 'so(N)+spin'")
    verify: bool = True
    workers: int = Field(default=1, ge=1, le=64)


class VerifyTextRequest(BaseModel):
    table_text: str = Field(description="a 'lie-structure v1' document")
    workers: int = Field(default=1, ge=1, le=64)


class ExportRequest(BaseModel):
    target: str
    verify: bool = False


class KostantRequest(BaseModel):
    big: str
    small: str | None = Field(default=None, description="preset name, e.g. B4 under F4")
    root_indices: list[int] | None = Field(
        default=None, description="0-based indices into the positive-root list")
    torus: int = Field(default=0, ge=0)
    cap: int = Field(default=5_000_000, ge=1)


class CosetRequest(BaseModel):
    big: str
    small: str
    space_name: str = ""
    space_dim: int | None = None


class ReportEnvelope(BaseModel):
    tool_version: str
    command: dict[str, Any]
    convention: str
    provenance: dict[str, str]
    payload: dict[str, Any]
