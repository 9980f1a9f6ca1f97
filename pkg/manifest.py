from __future__ import annotations
import csv
import hashlib
import io
import json
import logging
import os
from typing import Iterable
from __types__ import WorkbenchConfig
from default_config import default_config
from exceptions import ReportFormatError

_logger = logging.getLogger(__name__)

# source statement of each check, embedded in reports so that a failure names what it contradicts
REFERENCE_TAGS: dict[str, str] = {
    # verify-paper checks
    "gq-counts": "Eq(2)",
    "benson": "Eq(3)",
    "primitivity": "Rem2.5",
    "singer": "Rem2.5",
    "multipliers": "Prop3.1;Prop3.2;Thm3.3",
    "centralizer-bound": "Cor3.4",
    "hs-arithmetic": "Lemma4.2",
    "thresholds": "Lemma5.4-5.6",
    "oracles": "Lemma5.4-5.6",
    "candidates": "Table1",
    "relabeling": "Aut-invariance",
    # per multiplier
    "fixed_structure": "Prop3.1",
    "small_order": "Prop3.2",
    "centralizer": "Thm3.3",
    "bound": "Cor3.4",
    # sweeps
    "feasible": "Eq(2);Lemma2.1",
    "hs": "Lemma4.2",
    "hs-final": "Lemma4.2:final",
    "cor34": "Cor3.4",
    # subcommands
    "validate": "Eq(2)",
    "aut": "Rem2.5",
    "centralizers": "Lemma5.4-5.6",
}


def canonical_json(data) -> str:
    """
    Sorted keys, two-space indent and a trailing newline, so that equal reports are byte-identical.
    """
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def sha256_file(file_path: str) -> str:
    digest = hashlib.sha256()
    with open(file_path, "rb") as file:
        for chunk in iter(lambda: file.read(8192), b""):
            digest.update(chunk)
    return digest.hexdigest()


def sha256_text(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


class RunManifest():
    """
    RunManifest

    Everything needed to replay a command: the subcommand, its flags, the digests of its inputs, the tool
    version, the seed and the output paths.

    Attributes:
    - subcommand (str): The subcommand.
    - flags (dict): Parsed arguments other than the subcommand.
    - inputs (dict[str, str]): Input path (or corpus name) to sha256 digest.
    - tool_version (str): Workbench version.
    - seed (int): Seed of the random relabelings.
    - outputs (list[str]): Files written.

    """

    def __init__(self, subcommand: str, flags: dict, seed: int, config: WorkbenchConfig = default_config) -> None:
        self.subcommand = subcommand
        self.flags = {k: v for k, v in sorted(flags.items()) if v is not None}
        self.inputs: dict[str, str] = {}
        self.tool_version = config["tool_version"]
        self.schema = config["schema_version"]
        self.seed = seed
        self.outputs: list[str] = []

    def add_input(self, source: str, text: str = None) -> None:
        self.inputs[source] = sha256_text(text) if text is not None else sha256_file(source)

    def to_json(self) -> dict:
        return {"subcommand": self.subcommand, "flags": self.flags, "inputs": self.inputs, "schema": self.schema,
                "tool_version": self.tool_version, "seed": self.seed, "outputs": sorted(self.outputs)}


def report(manifest: RunManifest, body: dict) -> dict:
    return {"schema": manifest.schema, "manifest": manifest.to_json(), "report": body}


def write_report(data: dict, file_path: str = None, stream: io.TextIOBase = None) -> str:
    """
    Write a report as canonical JSON to a file (creating its directory) or to a stream.

    Returns:
    - str: The JSON text.

    """
    text = canonical_json(data)
    if file_path is not None:
        folder = os.path.dirname(file_path)
        if folder:
            os.makedirs(folder, exist_ok=True)
        with open(file_path, "w") as file:
            file.write(text)
        _logger.info("wrote %s", file_path)
    elif stream is not None:
        stream.write(text)
    return text


def write_csv(rows: Iterable[dict], file_path: str = None, stream: io.TextIOBase = None) -> str:
    """
    Write flat rows as CSV with the columns of the first row.

    Raises:
    - ReportFormatError: If the rows do not share the same columns.

    """
    rows = list(rows)
    buffer = io.StringIO()
    if rows:
        columns = list(rows[0])
        if any(list(row) != columns for row in rows):
            raise ReportFormatError("rows have different columns", columns=columns)
        writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    text = buffer.getvalue()
    if file_path is not None:
        with open(file_path, "w", newline="") as file:
            file.write(text)
    elif stream is not None:
        stream.write(text)
    return text


def read_json(source: str, stream: io.TextIOBase = None) -> tuple[dict, str]:
    """
    Read a JSON document from a file, or from the stream when source is "-".

    Returns:
    - tuple[dict, str]: The document and its raw text.

    Raises:
    - ReportFormatError: If the text is not JSON.

    """
    try:
        if source == "-":
            text = stream.read()
        else:
            with open(source, "r") as file:
                text = file.read()
        return json.loads(text), text
    except json.JSONDecodeError as e:
        raise ReportFormatError(f"{source} is not JSON: {e}", source=source)
