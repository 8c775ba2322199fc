"""
Report Generation

Renders command tables as CSV or JSON documents. Numbers carry 15
significant digits; the generation timestamp is the only varying content
and can be left out.
"""

import json
import math
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, List, Optional

import pandas as pd

from core.config import OUTPUT_CONFIG, PACKAGE_CONFIG
from utils.helpers import to_jsonable
from utils.logging_config import get_logger

logger = get_logger("reporting")

@dataclass
class CommandOutput:
    """A command's table with its parameters and run metadata"""
    command: str
    parameters: Dict[str, Any]
    frame: pd.DataFrame
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def row_count(self) -> int:
        return len(self.frame)

def make_frame(rows: List[Dict[str, Any]], columns: List[str]) -> pd.DataFrame:
    """DataFrame with a fixed column order, also when there are no rows"""
    return pd.DataFrame(rows, columns=columns)

def round_significant(value: Any, digits: int = OUTPUT_CONFIG["significant_digits"]) -> Any:
    if isinstance(value, float) and math.isfinite(value):
        return float(f"{value:.{digits}g}")
    return value

def _round_nested(value: Any) -> Any:
    if isinstance(value, dict):
        return {k: _round_nested(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_round_nested(v) for v in value]
    return round_significant(value)

def timestamp() -> str:
    return datetime.now().isoformat(timespec="seconds")

def render_csv(output: CommandOutput, header: bool = True, generated: Optional[str] = None) -> str:
    """Header comment line (optional), column names, then one line per row"""
    lines = []
    if header:
        lines.append(f"# {PACKAGE_CONFIG['name']} {output.command} generated {generated or timestamp()}\n")
    lines.append(output.frame.to_csv(index=False, float_format=OUTPUT_CONFIG["float_format"],
                                     lineterminator="\n"))
    return "".join(lines)

def render_json(output: CommandOutput, header: bool = True, generated: Optional[str] = None) -> str:
    """JSON document mirroring the CSV columns; NaN becomes null"""
    frame = output.frame.astype(object).where(pd.notna(output.frame), None)
    document: Dict[str, Any] = {"command": output.command}
    if header:
        document["generated"] = generated or timestamp()
    document["parameters"] = _round_nested(to_jsonable(output.parameters))
    document["rows"] = _round_nested(to_jsonable(frame.to_dict(orient="records")))
    document.update(_round_nested(to_jsonable(output.metadata)))
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"

def render(output: CommandOutput, fmt: str, header: bool = True) -> str:
    if fmt == "json":
        return render_json(output, header)
    return render_csv(output, header)
