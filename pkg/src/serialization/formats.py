"""
Frame, algebra and model files.

Files are JSON objects validated with pydantic. Emission is canonical:
fixed key order, pairs sorted, compact separators and one trailing newline,
so emitting a loaded file reproduces it byte for byte.
"""

import json
import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, StrictInt, StrictStr, ValidationError

from config.settings import MAX_FRAME_POINTS
from src.algebra.tha import FiniteTHA
from src.core.errors import AlgebraError, FileFormatError, ModelError
from src.core.order import BinRel
from src.frames.transit import TemporalTransit
from src.logic.models import AlgebraicModel, RelationalModel
from src.utils.helpers import iter_bits, mask_of, parse_json

logger = logging.getLogger(__name__)

Pair = Tuple[StrictInt, StrictInt]


class FrameFile(BaseModel):
    """``{"points": n, "r": [[i, j], ...], "labels": [...]}``"""

    model_config = ConfigDict(extra="forbid")

    points: StrictInt = Field(ge=0, le=MAX_FRAME_POINTS)
    r: List[Pair] = Field(default_factory=list)
    labels: Optional[List[StrictStr]] = None


class AlgebraFile(BaseModel):
    """``{"n": n, "leq": [[i, j], ...], "box": [...], "dia": [...], "labels": [...]}``"""

    model_config = ConfigDict(extra="forbid")

    n: StrictInt = Field(ge=1)
    leq: List[Pair]
    box: List[StrictInt]
    dia: List[StrictInt]
    labels: Optional[List[StrictStr]] = None


class RelationalModelFile(FrameFile):
    """A frame file plus ``val``: atom → sorted point list."""

    val: Dict[StrictStr, List[StrictInt]] = Field(default_factory=dict)


class AlgebraicModelFile(AlgebraFile):
    """An algebra file plus ``val``: atom → element."""

    val: Dict[StrictStr, StrictInt] = Field(default_factory=dict)


def _validate(schema, data: Dict[str, Any]):
    try:
        return schema.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        raise FileFormatError(first["msg"], location=first["loc"])


def _check_pairs(pairs: Sequence[Tuple[int, int]], size: int, key: str) -> None:
    for index, pair in enumerate(pairs):
        for side, value in enumerate(pair):
            if not 0 <= value < size:
                raise FileFormatError(f"Index {value} is outside 0..{size - 1}", location=(key, index, side))


def _check_labels(labels: Optional[List[str]], size: int) -> None:
    if labels is not None and len(labels) != size:
        raise FileFormatError(f"Expected {size} labels, got {len(labels)}", location=("labels",))


def _frame_from(spec: FrameFile) -> TemporalTransit:
    _check_pairs(spec.r, spec.points, "r")
    _check_labels(spec.labels, spec.points)
    return TemporalTransit.from_pairs(spec.points, spec.r, spec.labels)


def _algebra_from(spec: AlgebraFile) -> FiniteTHA:
    _check_pairs(spec.leq, spec.n, "leq")
    _check_labels(spec.labels, spec.n)
    for key in ("box", "dia"):
        table = getattr(spec, key)
        if len(table) != spec.n:
            raise FileFormatError(f"Expected {spec.n} entries, got {len(table)}", location=(key,))
        for index, value in enumerate(table):
            if not 0 <= value < spec.n:
                raise FileFormatError(f"Element {value} is outside 0..{spec.n - 1}", location=(key, index))
    try:
        return FiniteTHA.from_order(BinRel.from_pairs(spec.n, spec.leq), spec.box, spec.dia, spec.labels)
    except AlgebraError as e:
        raise FileFormatError(f"Order is not a distributive lattice: {e.message}", location=("leq",))


def load_frame(text: str) -> TemporalTransit:
    """
    Parse a frame file. The frame is not validated.

    Raises:
        FileFormatError: With the location of the offending field
    """
    return _frame_from(_validate(FrameFile, parse_json(text)))


def load_algebra(text: str) -> FiniteTHA:
    """
    Parse an algebra file, deriving ∧, ∨ and → from the order.

    Raises:
        FileFormatError: If a field is malformed or the order is not a
            distributive lattice
    """
    return _algebra_from(_validate(AlgebraFile, parse_json(text)))


def load_model(text: str) -> Union[RelationalModel, AlgebraicModel]:
    """
    Parse a model file: a frame file or an algebra file plus ``val``.

    Raises:
        FileFormatError: If the file is malformed or a valuation is invalid
    """
    data = parse_json(text)
    if "points" not in data and "n" not in data:
        raise FileFormatError("A model file needs either 'points' or 'n'")
    try:
        if "points" in data:
            spec = _validate(RelationalModelFile, data)
            frame = _frame_from(spec)
            for atom, points in spec.val.items():
                for index, point in enumerate(points):
                    if not 0 <= point < frame.size:
                        raise FileFormatError(f"Point {point} is outside the frame", location=("val", atom, index))
            return RelationalModel(frame, {atom: mask_of(points) for atom, points in spec.val.items()})
        spec = _validate(AlgebraicModelFile, data)
        return AlgebraicModel(_algebra_from(spec), dict(spec.val))
    except ModelError as e:
        atom = e.witness[0] if isinstance(e.witness, tuple) else e.witness
        raise FileFormatError(e.message, location=("val", atom))


def _canonical(data: Dict[str, Any]) -> str:
    return json.dumps(data, separators=(",", ":"), ensure_ascii=False) + "\n"


def frame_to_dict(f: TemporalTransit) -> Dict[str, Any]:
    data: Dict[str, Any] = {"points": f.size, "r": [list(pair) for pair in f.r_fwd.pairs()]}
    if f.labels:
        data["labels"] = list(f.labels)
    return data


def algebra_to_dict(a: FiniteTHA) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        "n": a.size,
        "leq": [list(pair) for pair in a.leq.pairs()],
        "box": list(a.box),
        "dia": list(a.dia),
    }
    if a.labels:
        data["labels"] = list(a.labels)
    return data


def dump_frame(f: TemporalTransit) -> str:
    return _canonical(frame_to_dict(f))


def dump_algebra(a: FiniteTHA) -> str:
    return _canonical(algebra_to_dict(a))


def dump_model(m: Union[RelationalModel, AlgebraicModel]) -> str:
    if isinstance(m, RelationalModel):
        data = frame_to_dict(m.frame)
        data["val"] = {atom: list(iter_bits(points)) for atom, points in sorted(m.valuation.items())}
    else:
        data = algebra_to_dict(m.algebra)
        data["val"] = dict(sorted(m.valuation.items()))
    return _canonical(data)
