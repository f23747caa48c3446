"""Canonical persistence: family JSON, certificates, run manifests.

A family file is one compact JSON object, schema version first:

    {"version":1,"edges":[[0,1],[2,3],[4,5]]}

The loader rebuilds the family through the canonicalizing constructor,
so loading and saving again is byte-identical. Certificates are written
indented for reading by humans. Every artifact written through
write_artifact gains a sibling <path>.manifest.json recording the
command line, input and output digests, and tool version; digests cover
artifact bytes only, never the manifest timestamp, so identical runs
yield identical digests.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from datetime import datetime, timezone

from .certify import Certificate, jsonable
from .core import Family
from .errors import ParseError

SCHEMA_VERSION = 1


def dumps_family(f: Family) -> str:
    payload = {"version": SCHEMA_VERSION, "edges": [list(e) for e in f.edges]}
    return json.dumps(payload, separators=(",", ":")) + "\n"


def save_family(f: Family, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_family(f))


def loads_family(text: str) -> Family:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise ParseError("top level must be a JSON object")
    version = payload.get("version")
    if version != SCHEMA_VERSION:
        raise ParseError(f"unsupported schema version {version!r}")
    edges = payload.get("edges")
    if not isinstance(edges, list):
        raise ParseError("edges must be a list of vertex lists")
    for e in edges:
        ok = isinstance(e, list) and all(
            isinstance(v, int) and not isinstance(v, bool) and v >= 0 for v in e
        )
        if not ok:
            raise ParseError(f"bad edge {e!r}: expected nonnegative integers")
    return Family(edges)


def load_family(path: str) -> Family:
    with open(path, encoding="utf-8") as fh:
        return loads_family(fh.read())


def emit_certificate(cert: Certificate, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(cert.to_json())


def sha256_text(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def sha256_file(path: str) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(65536), b""):
            digest.update(block)
    return digest.hexdigest()


@dataclass(frozen=True)
class RunManifest:
    """Reproducibility record for one artifact-producing invocation."""

    command: tuple[str, ...]
    inputs: dict[str, str]
    outputs: dict[str, str]
    tool_version: str
    timestamp: str

    def to_json(self) -> str:
        body = {
            "command": list(self.command),
            "inputs": self.inputs,
            "outputs": self.outputs,
            "tool_version": self.tool_version,
            "timestamp": self.timestamp,
        }
        return json.dumps(jsonable(body), indent=2, sort_keys=True) + "\n"


def manifest_path(artifact_path: str) -> str:
    return artifact_path + ".manifest.json"


def write_manifest(
    command: list[str],
    input_paths: list[str],
    output_paths: list[str],
    tool_version: str,
) -> str:
    """Digest the named files and write the manifest beside the first
    output; returns the manifest's path."""
    manifest = RunManifest(
        command=tuple(command),
        inputs={p: sha256_file(p) for p in sorted(input_paths)},
        outputs={p: sha256_file(p) for p in sorted(output_paths)},
        tool_version=tool_version,
        timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"),
    )
    target = manifest_path(output_paths[0])
    with open(target, "w", encoding="utf-8") as fh:
        fh.write(manifest.to_json())
    return target
