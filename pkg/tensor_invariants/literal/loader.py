"""Problem documents: `{"metric": {...}|"minkowski"|"euclidean:n", "tensor": {...}}`."""
import json
import math
from typing import Any, Dict, List, Optional, Tuple
from ..algebra.metric import Metric, euclidean, minkowski, new_metric
from ..algebra.tensor import Tensor2, Variance, new_tensor
from ..common.errors import check_dims
from ..common.parser_utils import ParseError
from .parser import metric_shortcut

VARIANCE_TAGS = {v.value: v for v in Variance}


def parse_json(text: str, what: str = "document") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Malformed JSON {what}: {e.msg} at position {e.pos}") from e


def _require(obj: Any, key: str, what: str) -> Any:
    if not isinstance(obj, dict):
        raise ParseError(f"{what} must be a JSON object")
    if key not in obj:
        raise ParseError(f"{what} is missing the {key!r} key")
    return obj[key]


def _matrix(raw: Any, what: str) -> List[List[float]]:
    if not isinstance(raw, list) or not raw or not all(isinstance(row, list) for row in raw):
        raise ParseError(f"{what} must be a non-empty list of rows")
    width = len(raw[0])
    if width != len(raw):
        raise ParseError(f"{what} must be square, got {len(raw)} rows of {width}")
    rows: List[List[float]] = []
    for row in raw:
        if len(row) != width:
            raise ParseError(f"{what} has rows of different lengths")
        if not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in row):
            raise ParseError(f"{what} must contain only numbers")
        if not all(math.isfinite(x) for x in row):
            raise ParseError(f"{what} contains a non-finite number")
        rows.append([float(x) for x in row])
    return rows


def metric_from_shortcut(src: str) -> Metric:
    name, dim = metric_shortcut(src)
    if name == "minkowski":
        return minkowski()
    return euclidean(dim)  # type: ignore[arg-type]


def metric_from_json(obj: Any) -> Metric:
    """A metric from its object form or a named shortcut string."""
    if isinstance(obj, str):
        return metric_from_shortcut(obj)
    g = _matrix(_require(obj, "g", "metric"), "metric 'g'")
    if "dim" in obj:
        dim = obj["dim"]
        if not isinstance(dim, int) or isinstance(dim, bool):
            raise ParseError(f"metric 'dim' must be an integer, got {dim!r}")
        check_dims(dim, len(g), len(g[0]))
    return new_metric(g)


def metric_from_text(src: str) -> Metric:
    """A `--metric` value: a shortcut or an inline JSON object."""
    src = src.strip()
    if src.startswith("{"):
        return metric_from_json(parse_json(src, "metric"))
    return metric_from_shortcut(src)


def tensor_from_json(obj: Any) -> Tensor2:
    tag = _require(obj, "variance", "tensor")
    if not isinstance(tag, str) or tag not in VARIANCE_TAGS:
        raise ParseError(f"Unknown variance {tag!r}; expected one of {sorted(VARIANCE_TAGS)}")
    c = _matrix(_require(obj, "c", "tensor"), "tensor 'c'")
    return new_tensor(c, VARIANCE_TAGS[tag])


def tensor_from_text(src: str) -> Tensor2:
    return tensor_from_json(parse_json(src, "tensor"))


def load_document(text: str) -> Dict[str, Any]:
    doc = parse_json(text)
    if not isinstance(doc, dict):
        raise ParseError("Problem document must be a JSON object")
    return doc


def load_problem(text: Optional[str], metric: Optional[str] = None,
                 tensor: Optional[str] = None) -> Tuple[Metric, Tensor2]:
    """Validated (metric, tensor) pair with matching dimensions.

    `metric` and `tensor` are `--metric`/`--tensor` texts; each one given
    replaces the matching key of the document, which may then be absent.
    """
    doc = load_document(text) if text is not None else {}
    if metric is not None:
        m = metric_from_text(metric)
    else:
        m = metric_from_json(_require(doc, "metric", "problem"))
    if tensor is not None:
        t = tensor_from_text(tensor)
    else:
        t = tensor_from_json(_require(doc, "tensor", "problem"))
    check_dims(m.dim, t.dim)
    return m, t
